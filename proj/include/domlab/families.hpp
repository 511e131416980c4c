#pragma once

#include "domlab/graph.hpp"

namespace domlab {

enum class StandardKind { Complete, Empty, Cycle, Path };

/// Named graph on vertices 0..n-1 in canonical labeling. Cycles need n >= 3.
Graph make_standard(StandardKind kind, int n);

inline Graph complete_graph(int n) { return make_standard(StandardKind::Complete, n); }
inline Graph empty_graph(int n) { return make_standard(StandardKind::Empty, n); }
inline Graph cycle_graph(int n) { return make_standard(StandardKind::Cycle, n); }
inline Graph path_graph(int n) { return make_standard(StandardKind::Path, n); }

/// Cartesian product with K2: vertex v of g maps to v and order + v, joined
/// by a perfect matching.
Graph prism(const Graph& g);

/// g on 0..|g|-1 followed by h shifted up by |g|.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Image of g under the vertex map v -> perm[v]. perm must be a
/// permutation of 0..order-1.
Graph relabel(const Graph& g, std::span<const int> perm);

} // namespace domlab
