#pragma once

#include "domlab/domination.hpp"
#include "domlab/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domlab {

struct Literal {
    int var = 1; ///< 1-based variable index
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF formula over variables 1..num_vars with at least two clauses.
struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    int num_clauses() const noexcept { return static_cast<int>(clauses.size()); }
};

/// Throws PreconditionError when the formula breaks its invariants.
void check_formula(const CnfFormula& f);

struct DimacsOptions {
    /// Pad 1- and 2-literal clauses to three literals by repeating the last
    /// literal. Longer clauses are always rejected.
    bool pad_short_clauses = false;
};

/// Parses DIMACS CNF ("p cnf n m", zero-terminated clauses, 'c' comment
/// lines). Throws ParseError carrying the 1-based line number.
CnfFormula parse_dimacs(std::string_view text, const DimacsOptions& opts = {});

enum class VertexKind { Literal, Filler, Clause, A, B };

struct VertexRole {
    VertexKind kind;
    /// Variable (1-based) for Literal and Filler, clause (1-based) for
    /// Clause, 0 for A and B.
    int index = 0;
    bool negated = false; ///< Literal only
    int slot = 0;         ///< position inside the gadget (0..3) for Literal and Filler

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

/// Short display label: "x3", "~x3", "g3.2", "c1", "a", "b".
std::string role_label(const VertexRole& r);

/// Canonical numbering: gadget i (1-based) occupies 4(i-1)..4(i-1)+3 with
/// x_i first, ~x_i second and two fillers; then c_1..c_m; then a, b.
struct ReductionGraph {
    Graph graph;
    std::vector<VertexRole> roles;
    int num_vars = 0;
    int num_clauses = 0;

    int literal_vertex(Literal l) const noexcept { return 4 * (l.var - 1) + (l.negated ? 1 : 0); }
    int clause_vertex(int j) const noexcept { return 4 * num_vars + (j - 1); }
    int a_vertex() const noexcept { return 4 * num_vars + num_clauses; }
    int b_vertex() const noexcept { return a_vertex() + 1; }
};

ReductionGraph build_reduction(const CnfFormula& f);

struct SatOptions {
    int max_vars = 20;
};

/// First satisfying assignment in counting order (bit i of the counter is
/// variable i + 1), or nullopt. Throws CapExceeded past opts.max_vars.
std::optional<std::vector<bool>> sat_brute_force(const CnfFormula& f, const SatOptions& opts = {});

bool satisfies(const CnfFormula& f, const std::vector<bool>& truth);

/// Weight n + 1 assignment: 1 on a and on every true literal vertex.
/// Throws PreconditionError when `truth` does not satisfy the formula.
WeakRomanAssignment truth_assignment_to_wrdf(const ReductionGraph& r, const CnfFormula& f,
                                             const std::vector<bool>& truth);

struct Theorem2Report {
    int num_vars = 0;
    int num_clauses = 0;
    int order = 0;
    bool k5_free = false;
    int gamma_r2 = 0;
    int gamma_r = 0;
    bool satisfiable = false;
    std::optional<std::vector<bool>> truth;
    bool rainbow_matches = false;      ///< gamma_r2 == 2n + 2
    bool lower_bound_holds = false;    ///< gamma_r >= n + 1
    bool equivalence_holds = false;    ///< (gamma_r == n + 1) <=> satisfiable
    bool certificate_valid = true;     ///< truth -> wrdf validates (when satisfiable)

    bool all_pass() const noexcept {
        return k5_free && rainbow_matches && lower_bound_holds && equivalence_holds && certificate_valid;
    }
};

/// Builds the reduction graph, solves both parameters exactly and checks
/// the equivalence against brute-force satisfiability. The weak Roman search
/// is bounded by weight n + 2.
Theorem2Report verify_theorem2(const CnfFormula& f, const SolverOptions& opts = {});

} // namespace domlab
