#include "domlab/graph.hpp"

#include "domlab/error.hpp"

#include <string>

namespace domlab {

namespace {

void check_order(int order) {
    if (order < 0 || order > kMaxOrder)
        throw RangeError("graph order " + std::to_string(order) + " outside [0, " +
                         std::to_string(kMaxOrder) + "]");
}

} // namespace

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(from(std::span<const int>(members.begin(), members.size()))) {}

VertexSet VertexSet::from(std::span<const int> members) {
    Mask bits = 0;
    for (int v : members) {
        if (v < 0 || v >= 64)
            throw RangeError("vertex index " + std::to_string(v) + " out of range");
        bits |= bit(v);
    }
    return VertexSet(bits);
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_bit(bits_, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int order) {
    check_order(order);
    order_ = order;
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(order);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_code(int order, std::uint64_t code) {
    if (order > kMaxCodeOrder)
        throw RangeError("adjacency code supports order <= " + std::to_string(kMaxCodeOrder));
    Graph g(order);
    int idx = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((code >> idx) & 1U) {
                g.adj_[static_cast<std::size_t>(i)] |= bit(j);
                g.adj_[static_cast<std::size_t>(j)] |= bit(i);
            }
    if (idx < 64 && (code >> idx) != 0)
        throw RangeError("adjacency code has bits beyond the vertex pairs of order " +
                         std::to_string(order));
    return g;
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < order_; ++v)
        twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u)
        for_each_bit(neighbors(u) & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

std::uint64_t Graph::code() const {
    if (order_ > kMaxCodeOrder)
        throw RangeError("adjacency code supports order <= " + std::to_string(kMaxCodeOrder));
    return induced_code(*this, vertices());
}

Mask Graph::open_neighborhood(Mask s) const noexcept {
    Mask out = 0;
    for_each_bit(s, [&](int v) { out |= neighbors(v); });
    return out;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
    if (a.order_ != b.order_)
        return false;
    for (int v = 0; v < a.order_; ++v)
        if (a.neighbors(v) != b.neighbors(v))
            return false;
    return true;
}

GraphBuilder::GraphBuilder(int order) : graph_(order) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    const int n = graph_.order_;
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw RangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") outside vertex range of order " + std::to_string(n));
    if (u == v)
        throw PreconditionError("loop at vertex " + std::to_string(u));
    graph_.adj_[static_cast<std::size_t>(u)] |= bit(v);
    graph_.adj_[static_cast<std::size_t>(v)] |= bit(u);
    return *this;
}

void check_in_range(const Graph& g, VertexSet s) {
    Mask outside = s.bits() & ~g.vertices();
    if (outside != 0)
        throw RangeError("vertex " + std::to_string(lowest(outside)) +
                         " outside vertex range of order " + std::to_string(g.order()));
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    check_in_range(g, s);
    std::array<int, kMaxOrder> keep{};
    int k = 0;
    for_each_bit(s.bits(), [&](int v) { keep[static_cast<std::size_t>(k++)] = v; });
    GraphBuilder b(k);
    for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]))
                b.add_edge(i, j);
    return b.build();
}

std::uint64_t induced_code(const Graph& g, Mask s) noexcept {
    std::array<int, kMaxCodeOrder> keep{};
    int k = 0;
    for_each_bit(s, [&](int v) {
        if (k < kMaxCodeOrder)
            keep[static_cast<std::size_t>(k++)] = v;
    });
    std::uint64_t code = 0;
    int idx = 0;
    for (int j = 1; j < k; ++j) {
        const Mask row = g.neighbors(keep[static_cast<std::size_t>(j)]);
        for (int i = 0; i < j; ++i, ++idx)
            if (row & bit(keep[static_cast<std::size_t>(i)]))
                code |= std::uint64_t{1} << idx;
    }
    return code;
}

std::vector<Mask> components(const Graph& g) {
    std::vector<Mask> out;
    Mask unseen = g.vertices();
    while (unseen != 0) {
        Mask comp = bit(lowest(unseen));
        Mask frontier = comp;
        while (frontier != 0) {
            Mask next = g.open_neighborhood(frontier) & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    // The empty graph and K1 count as connected.
    return components(g).size() <= 1;
}

bool is_complete_set(const Graph& g, VertexSet s) {
    check_in_range(g, s);
    Mask rest = s.bits();
    while (rest != 0) {
        int v = lowest(rest);
        rest &= rest - 1;
        if ((g.neighbors(v) & rest) != rest)
            return false;
    }
    return true;
}

} // namespace domlab
