#pragma once

#include "domlab/domination.hpp"
#include "domlab/graph.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace domlab {

struct ExtremalReport {
    bool extremal = false;
    /// Set for the empty graph, where 0 = 2 * 0 holds trivially.
    bool vacuous = false;
    int gamma_r = 0;
    int gamma_r2 = 0;
};

/// Solves both parameters exactly and tests gamma_r2 == 2 * gamma_r.
ExtremalReport is_extremal(const Graph& g, const SolverOptions& opts = {});

/// V1 = {v_1..v_k} ordered by index, with the partition P_1..P_k,
/// Q_1..Q_k of the remaining vertices.
struct ExtremalDecomposition {
    std::vector<int> v_list;
    std::vector<VertexSet> p_sets;
    std::vector<VertexSet> q_sets;
};

/// Builds the decomposition induced by a minimum weak Roman assignment of
/// an extremal graph. A vertex outside V1 and every P_i goes to the first
/// Q_i whose v_i is a neighbour that defends it.
///
/// Throws PreconditionError when gfun is invalid, not minimum, uses value
/// 2, or g is not extremal; TheoremViolation when some P_i comes out empty
/// or not complete. `known` skips re-solving when the caller already has
/// the parameters of g.
ExtremalDecomposition extract_decomposition(const Graph& g, const WeakRomanAssignment& gfun,
                                            const std::optional<ExtremalReport>& known = std::nullopt,
                                            const SolverOptions& opts = {});

enum class DecompositionClause {
    Shape,       ///< list lengths disagree
    Partition,   ///< V1, P_i, Q_i do not partition V(G)
    PNonEmpty,
    PComplete,
    PMembership, ///< P_i differs from its defining neighbourhood condition
    QAdjacency,  ///< a Q_i vertex misses a vertex of {v_i} and P_i
};

std::string_view clause_name(DecompositionClause c);

struct DecompositionFailure {
    DecompositionClause clause;
    int index = -1; ///< i of the offending P_i / Q_i, -1 when global
    std::vector<int> vertices;
};

struct DecompositionVerdict {
    bool valid = true;
    std::vector<DecompositionFailure> failures;

    explicit operator bool() const noexcept { return valid; }
};

DecompositionVerdict verify_decomposition(const Graph& g, const ExtremalDecomposition& d);

enum class ExtremalForm {
    IsK2,
    TwoTrianglesPlusTwoMatching,
    TriangleSystem,
    NotOfCharacterizedForm,
};

std::string_view form_name(ExtremalForm f);

enum class TriangleRole { V, W, U };

struct RoleLabel {
    TriangleRole role;
    int triangle;

    friend bool operator==(const RoleLabel&, const RoleLabel&) = default;
};

/// Triangles are numbered from 0. In canonical labeling triangle i holds
/// v_i = 3i, w_i = 3i + 1, u_i = 3i + 2.
struct ExtremalClassification {
    ExtremalForm form = ExtremalForm::NotOfCharacterizedForm;
    /// Number of triangles (1 for K2, 0 when not characterized).
    int k = 0;
    /// Pairs {a, b} with a < b, one per edge v_a v_b (TriangleSystem only).
    std::vector<std::pair<int, int>> added_edges;
    /// Role of each input vertex; empty for IsK2 and NotOfCharacterizedForm.
    std::vector<RoleLabel> roles;
};

/// Structural recognition of the connected {K4, K4-e}-free extremal
/// graphs. Throws PreconditionError for disconnected or empty input and for
/// input containing K4 or K4-e.
ExtremalClassification recognize_c2(const Graph& g);

/// Graph described by a classification, in canonical labeling.
Graph rebuild(const ExtremalClassification& c);

/// Canonical vertex index of each input vertex under c.roles (identity for
/// IsK2).
std::vector<int> canonical_labeling(const ExtremalClassification& c);

/// True iff every component is K2. Throws PreconditionError when g
/// contains a triangle.
bool recognize_c1(const Graph& g);

/// k disjoint triangles v_i w_i u_i plus v_a v_b for each added pair.
/// Pairs use triangle indices in [0, k).
Graph generate_triangle_system(int k, std::span<const std::pair<int, int>> added_edges);

/// Triangles {0,1,2} and {3,4,5} joined by 0-3, 1-4 (and 2-5 for three
/// edges). `matching_edges` must be 2 or 3.
Graph generate_two_triangles_matching(int matching_edges);

} // namespace domlab
