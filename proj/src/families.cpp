#include "domlab/families.hpp"

#include "domlab/error.hpp"

#include <string>

namespace domlab {

Graph make_standard(StandardKind kind, int n) {
    if (n < 0)
        throw RangeError("negative order");
    GraphBuilder b(n);
    switch (kind) {
    case StandardKind::Complete:
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                b.add_edge(i, j);
        break;
    case StandardKind::Empty:
        break;
    case StandardKind::Cycle:
        if (n < 3)
            throw PreconditionError("cycle needs at least 3 vertices, got " + std::to_string(n));
        for (int i = 0; i < n; ++i)
            b.add_edge(i, (i + 1) % n);
        break;
    case StandardKind::Path:
        for (int i = 0; i + 1 < n; ++i)
            b.add_edge(i, i + 1);
        break;
    }
    return b.build();
}

Graph prism(const Graph& g) {
    const int n = g.order();
    if (2 * n > kMaxOrder)
        throw RangeError("prism of order " + std::to_string(n) + " exceeds the order limit");
    GraphBuilder b(2 * n);
    for (auto [u, v] : g.edges()) {
        b.add_edge(u, v);
        b.add_edge(n + u, n + v);
    }
    for (int v = 0; v < n; ++v)
        b.add_edge(v, n + v);
    return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order();
    if (n + h.order() > kMaxOrder)
        throw RangeError("disjoint union exceeds the order limit");
    GraphBuilder b(n + h.order());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (auto [u, v] : h.edges())
        b.add_edge(n + u, n + v);
    return b.build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw PreconditionError("permutation length does not match graph order");
    Mask seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n || (seen & bit(p)) != 0)
            throw PreconditionError("not a permutation of the vertex range");
        seen |= bit(p);
    }
    GraphBuilder b(n);
    for (auto [u, v] : g.edges())
        b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return b.build();
}

} // namespace domlab
