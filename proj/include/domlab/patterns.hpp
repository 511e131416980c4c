#pragma once

#include "domlab/graph.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace domlab {

/// The fixed forbidden subgraphs the characterizations are phrased in.
enum class Pattern {
    EmptyTriple, ///< three pairwise non-adjacent vertices
    Triangle,
    C5,
    K4,
    Diamond, ///< K4 minus one edge
    K5,
};

std::string_view pattern_name(Pattern p);
Graph pattern_graph(Pattern p);
int pattern_order(Pattern p);

/// Lexicographically first sorted vertex tuple of g that induces a copy
/// of `p`, or nullopt when g is p-free.
std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern p);

inline bool is_free_of(const Graph& g, Pattern p) { return !contains_induced(g, p).has_value(); }

} // namespace domlab
