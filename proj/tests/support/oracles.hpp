#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Graph container (read through adjacent()/order()) and
// are only meant for tiny inputs.

#include "domlab/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using domlab::Graph;
using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const Graph& g) {
    const int n = g.order();
    Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            m[u][v] = u != v && g.adjacent(u, v);
    return m;
}

// Upper-triangle pairs in graph6 column order: (0,1),(0,2),(1,2),(0,3),...
inline std::vector<std::pair<int, int>> column_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            out.emplace_back(i, j);
    return out;
}

inline Graph graph_from_bits(int n, std::uint64_t bits) {
    domlab::GraphBuilder b(n);
    const auto pairs = column_pairs(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((bits >> k) & 1U)
            b.add_edge(pairs[k].first, pairs[k].second);
    return b.build();
}

// Every labeled graph on n vertices (2^(n choose 2) of them).
inline void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
        fn(graph_from_bits(n, bits));
}

// Minimum dominating set size over all 2^n subsets.
inline int gamma(const Graph& g) {
    const int n = g.order();
    const Matrix a = matrix_of(g);
    int best = n;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if ((s >> u) & 1U)
                continue;
            bool seen = false;
            for (int v = 0; v < n; ++v)
                seen = seen || (((s >> v) & 1U) && a[u][v]);
            ok = seen;
        }
        if (ok)
            best = std::min(best, __builtin_popcount(s));
    }
    return best;
}

// f[v] in {0,1,2,3} as a bit set over colours {1,2}.
inline bool rainbow_valid(const Matrix& a, const std::vector<int>& f) {
    const int n = static_cast<int>(f.size());
    for (int u = 0; u < n; ++u) {
        if (f[u] != 0)
            continue;
        int seen = 0;
        for (int v = 0; v < n; ++v)
            if (a[u][v])
                seen |= f[v];
        if (seen != 3)
            return false;
    }
    return true;
}

inline int rainbow_weight(const std::vector<int>& f) {
    int w = 0;
    for (int x : f)
        w += (x & 1) + ((x >> 1) & 1);
    return w;
}

// Visits every assignment with entries in [0, base).
inline void for_each_assignment(int n, int base, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(f);
        int i = 0;
        while (i < n && f[i] == base - 1)
            f[i++] = 0;
        if (i == n)
            return;
        ++f[i];
    }
}

inline int gamma_r2(const Graph& g) {
    const Matrix a = matrix_of(g);
    int best = 2 * g.order();
    for_each_assignment(g.order(), 4, [&](const std::vector<int>& f) {
        const int w = rainbow_weight(f);
        if (w < best && rainbow_valid(a, f))
            best = w;
    });
    return best;
}

inline bool dominating_positive(const Matrix& a, const std::vector<int>& g) {
    const int n = static_cast<int>(g.size());
    for (int u = 0; u < n; ++u) {
        if (g[u] > 0)
            continue;
        bool seen = false;
        for (int v = 0; v < n; ++v)
            seen = seen || (a[u][v] && g[v] > 0);
        if (!seen)
            return false;
    }
    return true;
}

inline bool weak_roman_valid(const Matrix& a, const std::vector<int>& g) {
    const int n = static_cast<int>(g.size());
    for (int u = 0; u < n; ++u) {
        if (g[u] != 0)
            continue;
        bool defended = false;
        for (int v = 0; v < n && !defended; ++v) {
            if (!a[u][v] || g[v] < 1)
                continue;
            std::vector<int> moved = g;
            moved[u] += 1;
            moved[v] -= 1;
            defended = dominating_positive(a, moved);
        }
        if (!defended)
            return false;
    }
    return true;
}

inline int weight(const std::vector<int>& g) {
    int w = 0;
    for (int x : g)
        w += x;
    return w;
}

inline int gamma_r(const Graph& g) {
    const Matrix a = matrix_of(g);
    int best = 2 * g.order();
    for_each_assignment(g.order(), 3, [&](const std::vector<int>& f) {
        const int w = weight(f);
        if (w < best && weak_roman_valid(a, f))
            best = w;
    });
    return best;
}

inline bool connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1)
        return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v)
            if (!seen[v] && g.adjacent(u, v)) {
                seen[v] = true;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

// Does some |P|-subset of g induce a graph isomorphic to pattern p?
// Tries every ordered selection of distinct vertices.
inline bool contains_induced_naive(const Graph& g, const Matrix& p) {
    const int k = static_cast<int>(p.size());
    const int n = g.order();
    if (k > n)
        return false;
    std::vector<int> pick;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool()> rec = [&]() -> bool {
        const int i = static_cast<int>(pick.size());
        if (i == k)
            return true;
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = g.adjacent(pick[j], v) == p[j][i];
            if (!ok)
                continue;
            used[v] = true;
            pick.push_back(v);
            if (rec())
                return true;
            pick.pop_back();
            used[v] = false;
        }
        return false;
    };
    return rec();
}

inline Matrix matrix_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [u, v] : edges)
        m[u][v] = m[v][u] = true;
    return m;
}

// Hand decoding of short-form graph6 following the byte layout directly.
inline std::optional<Matrix> decode_graph6(const std::string& s) {
    if (s.empty() || s[0] < 63 || s[0] > 125)
        return std::nullopt;
    const int n = s[0] - 63;
    const auto pairs = column_pairs(n);
    const std::size_t groups = (pairs.size() + 5) / 6;
    if (s.size() != 1 + groups)
        return std::nullopt;
    Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const int byte = s[1 + k / 6] - 63;
        if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
            m[pairs[k].first][pairs[k].second] = true;
            m[pairs[k].second][pairs[k].first] = true;
        }
    }
    return m;
}

} // namespace oracle
