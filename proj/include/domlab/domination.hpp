#pragma once

#include "domlab/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace domlab {

/// Label of a vertex under a 2-rainbow assignment. The numeric value is the
/// tie-break order and also the bit pattern (bit 0 = colour 1, bit 1 =
/// colour 2).
enum class RainbowLabel : std::uint8_t { None = 0, One = 1, Two = 2, Both = 3 };

inline int label_size(RainbowLabel l) { return popcount(static_cast<Mask>(l)); }

class RainbowAssignment {
public:
    RainbowAssignment() = default;
    explicit RainbowAssignment(std::vector<RainbowLabel> labels) : labels_(std::move(labels)) {}
    /// Builds from the colour classes: colour 1 on `ones`, colour 2 on `twos`.
    static RainbowAssignment from_masks(int order, Mask ones, Mask twos);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    RainbowLabel operator[](int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    const std::vector<RainbowLabel>& labels() const noexcept { return labels_; }
    int weight() const;
    Mask colour_class(int colour) const;
    /// Same assignment with colours 1 and 2 exchanged.
    RainbowAssignment swapped() const;

    friend bool operator==(const RainbowAssignment&, const RainbowAssignment&) = default;

private:
    std::vector<RainbowLabel> labels_;
};

class WeakRomanAssignment {
public:
    WeakRomanAssignment() = default;
    /// Throws RangeError for values outside {0, 1, 2}.
    explicit WeakRomanAssignment(std::vector<int> values);
    static WeakRomanAssignment from_masks(int order, Mask positive, Mask twos);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    int operator[](int v) const { return values_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::uint8_t>& values() const noexcept { return values_; }
    int weight() const;
    /// Vertices with value >= 1.
    Mask positive() const;
    /// Vertices with value 2.
    Mask twos() const;

    friend bool operator==(const WeakRomanAssignment&, const WeakRomanAssignment&) = default;

private:
    std::vector<std::uint8_t> values_;
};

template <class Witness>
struct SolveResult {
    int value = 0;
    Witness witness;
};

/// Outcome of a validator. `witness` names a violating vertex when invalid.
struct Verdict {
    bool valid = true;
    std::optional<int> witness;

    explicit operator bool() const noexcept { return valid; }
};

struct SolverOptions {
    /// Solvers refuse graphs above this order (CapExceeded).
    int max_order = 24;
    /// When set, the search gives up (CapExceeded) past this weight.
    std::optional<int> max_weight;
};

inline constexpr int kDefaultSolverMaxOrder = 24;

bool is_dominating_set(const Graph& g, VertexSet d);

/// Minimum dominating set; the witness is the lexicographically smallest
/// optimal set under the 0 < 1 indicator order.
SolveResult<VertexSet> domination_number(const Graph& g, const SolverOptions& opts = {});

/// Valid iff every vertex labelled None sees both colours among its
/// neighbours. Throws PreconditionError on a length mismatch.
Verdict validate_rainbow(const Graph& g, const RainbowAssignment& f);

/// 2-rainbow domination number with the lexicographically smallest optimal
/// assignment under None < One < Two < Both.
SolveResult<RainbowAssignment> rainbow_number(const Graph& g, const SolverOptions& opts = {});

/// Moves one unit of weight from v to u. Rejects u == v, g(v) == 0 and
/// g(u) >= 1 with PreconditionError.
WeakRomanAssignment apply_move(const WeakRomanAssignment& gfun, int v, int u);

/// Same transfer without the domain checks; values may leave {0, 1, 2}.
/// Only u == v and out-of-range indices are rejected.
std::vector<int> apply_move_unchecked(std::span<const int> gfun, int v, int u);

/// Valid iff every vertex u with value 0 has a positive neighbour v such
/// that the positive set after moving one unit from v to u dominates.
Verdict validate_weak_roman(const Graph& g, const WeakRomanAssignment& gfun);

/// Weak Roman domination number with the lexicographically smallest
/// optimal assignment under 0 < 1 < 2.
SolveResult<WeakRomanAssignment> weak_roman_number(const Graph& g, const SolverOptions& opts = {});

/// Value-only variants. They stop at the first optimal assignment and skip
/// the tie-break pass.
int domination_value(const Graph& g, const SolverOptions& opts = {});
int rainbow_value(const Graph& g, const SolverOptions& opts = {});
int weak_roman_value(const Graph& g, const SolverOptions& opts = {});

/// Calls fn on every minimum weak Roman assignment of g (in no particular
/// order) and returns the minimum weight.
int for_each_minimum_weak_roman(const Graph& g,
                                const std::function<void(const WeakRomanAssignment&)>& fn,
                                const SolverOptions& opts = {});

} // namespace domlab
