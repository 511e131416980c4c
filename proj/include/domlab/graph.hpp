#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace domlab {

using Mask = std::uint64_t;

/// Largest order representable in graph6 short form, and the hard limit of
/// the word-sized adjacency rows.
inline constexpr int kMaxOrder = 62;

/// Largest order whose upper-triangle adjacency code fits in one word.
inline constexpr int kMaxCodeOrder = 11;

inline constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

inline constexpr Mask low_bits(int n) noexcept {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) noexcept { return std::popcount(m); }

inline int lowest(Mask m) noexcept { return std::countr_zero(m); }

/// Calls fn(v) for every set bit of m in increasing order.
template <class Fn>
inline void for_each_bit(Mask m, Fn&& fn) {
    while (m != 0) {
        fn(lowest(m));
        m &= m - 1;
    }
}

/// A subset of the vertex indices [0, 64). Range against a concrete graph
/// is checked where the set is used.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);

    /// Throws RangeError for indices outside [0, 64).
    static VertexSet from(std::span<const int> members);

    constexpr Mask bits() const noexcept { return bits_; }
    bool contains(int v) const noexcept { return v >= 0 && v < 64 && (bits_ & bit(v)) != 0; }
    int size() const noexcept { return popcount(bits_); }
    bool empty() const noexcept { return bits_ == 0; }
    std::vector<int> members() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    Mask bits_ = 0;
};

/// Finite simple undirected graph on vertices 0..order-1, stored as one
/// adjacency bitmask per vertex. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph of the given order.
    explicit Graph(int order);

    /// Throws RangeError on out-of-range endpoints and PreconditionError on
    /// loops. Parallel edges collapse.
    static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges);

    /// Inverse of code(): bit j of `code` is the j-th vertex pair in graph6
    /// column order (0,1),(0,2),(1,2),(0,3),...
    static Graph from_code(int order, std::uint64_t code);

    int order() const noexcept { return order_; }
    Mask vertices() const noexcept { return low_bits(order_); }
    Mask neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    Mask closed_neighbors(int v) const noexcept { return neighbors(v) | bit(v); }
    bool adjacent(int u, int v) const noexcept { return (neighbors(u) & bit(v)) != 0; }
    int degree(int v) const noexcept { return popcount(neighbors(v)); }
    int edge_count() const noexcept;
    std::vector<std::pair<int, int>> edges() const;

    /// Upper-triangle adjacency bits in graph6 column order. Requires
    /// order <= kMaxCodeOrder.
    std::uint64_t code() const;

    /// Union of open neighborhoods of the members of s.
    Mask open_neighborhood(Mask s) const noexcept;
    /// Union of closed neighborhoods of the members of s.
    Mask closed_neighborhood(Mask s) const noexcept { return open_neighborhood(s) | s; }

    friend bool operator==(const Graph& a, const Graph& b) noexcept;

private:
    friend class GraphBuilder;

    int order_ = 0;
    std::array<Mask, kMaxOrder> adj_{};
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int order);

    int order() const noexcept { return graph_.order_; }
    GraphBuilder& add_edge(int u, int v);
    Graph build() const { return graph_; }

private:
    Graph graph_;
};

/// Throws RangeError when s has members outside g's vertex range.
void check_in_range(const Graph& g, VertexSet s);

/// Order-preserving relabeling of the kept vertices onto 0..|s|-1.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Same as induced_subgraph but without the range check and returning
/// only the adjacency code. Requires |s| <= kMaxCodeOrder.
std::uint64_t induced_code(const Graph& g, Mask s) noexcept;

bool is_connected(const Graph& g);

/// Every pair of s adjacent. Empty sets and singletons are complete.
bool is_complete_set(const Graph& g, VertexSet s);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<Mask> components(const Graph& g);

} // namespace domlab
