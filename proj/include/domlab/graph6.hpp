#pragma once

#include "domlab/graph.hpp"

#include <string>
#include <string_view>

namespace domlab {

/// Decodes one graph6 record (short form, order <= 62). An optional
/// ">>graph6<<" header prefix is accepted. Throws ParseError carrying the
/// byte offset of the first offending byte.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6 short form. Throws RangeError for order > 62.
std::string emit_graph6(const Graph& g);

} // namespace domlab
