#include "domlab/patterns.hpp"

#include "domlab/families.hpp"

#include <array>

namespace domlab {

namespace {

int edges_within(const Graph& g, Mask s) {
    int twice = 0;
    for_each_bit(s, [&](int v) { twice += popcount(g.neighbors(v) & s); });
    return twice / 2;
}

bool two_regular(const Graph& g, Mask s) {
    bool ok = true;
    for_each_bit(s, [&](int v) { ok = ok && popcount(g.neighbors(v) & s) == 2; });
    return ok;
}

bool matches(const Graph& g, Mask s, Pattern p) {
    switch (p) {
    case Pattern::EmptyTriple: return edges_within(g, s) == 0;
    case Pattern::Triangle: return edges_within(g, s) == 3;
    case Pattern::C5: return two_regular(g, s);
    case Pattern::K4: return edges_within(g, s) == 6;
    case Pattern::Diamond: return edges_within(g, s) == 5;
    case Pattern::K5: return edges_within(g, s) == 10;
    }
    return false;
}

// Candidates that may extend `chosen` towards a copy of p. Cliques and
// independent sets admit exact filtering; the other patterns take all.
Mask extension_candidates(const Graph& g, Pattern p, int v, Mask candidates) {
    switch (p) {
    case Pattern::Triangle:
    case Pattern::K4:
    case Pattern::K5: return candidates & g.neighbors(v);
    case Pattern::EmptyTriple: return candidates & ~g.neighbors(v);
    default: return candidates;
    }
}

bool search(const Graph& g, Pattern p, int remaining, Mask chosen, Mask candidates, Mask& found) {
    if (remaining == 0) {
        if (matches(g, chosen, p)) {
            found = chosen;
            return true;
        }
        return false;
    }
    while (popcount(candidates) >= remaining) {
        const int v = lowest(candidates);
        candidates &= candidates - 1;
        if (search(g, p, remaining - 1, chosen | bit(v), extension_candidates(g, p, v, candidates),
                   found))
            return true;
    }
    return false;
}

} // namespace

std::string_view pattern_name(Pattern p) {
    switch (p) {
    case Pattern::EmptyTriple: return "co-K3";
    case Pattern::Triangle: return "K3";
    case Pattern::C5: return "C5";
    case Pattern::K4: return "K4";
    case Pattern::Diamond: return "K4-e";
    case Pattern::K5: return "K5";
    }
    return "?";
}

int pattern_order(Pattern p) {
    switch (p) {
    case Pattern::EmptyTriple:
    case Pattern::Triangle: return 3;
    case Pattern::K4:
    case Pattern::Diamond: return 4;
    case Pattern::C5:
    case Pattern::K5: return 5;
    }
    return 0;
}

Graph pattern_graph(Pattern p) {
    switch (p) {
    case Pattern::EmptyTriple: return empty_graph(3);
    case Pattern::Triangle: return complete_graph(3);
    case Pattern::C5: return cycle_graph(5);
    case Pattern::K4: return complete_graph(4);
    case Pattern::Diamond: return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    case Pattern::K5: return complete_graph(5);
    }
    return Graph();
}

std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern p) {
    Mask found = 0;
    if (!search(g, p, pattern_order(p), 0, g.vertices(), found))
        return std::nullopt;
    return VertexSet(found).members();
}

} // namespace domlab
