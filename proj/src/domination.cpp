#include "domlab/domination.hpp"

#include "domlab/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace domlab {

namespace {

void check_length(const Graph& g, int size) {
    if (size != g.order())
        throw PreconditionError("assignment length " + std::to_string(size) +
                                " does not match graph order " + std::to_string(g.order()));
}

void check_order_cap(const Graph& g, const SolverOptions& opts) {
    if (g.order() > opts.max_order)
        throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds solver cap " +
                          std::to_string(opts.max_order));
}

int weight_limit(const Graph& g, const SolverOptions& opts) {
    // Every parameter here is at most the order (all-ones assignment).
    return opts.max_weight ? std::min(*opts.max_weight, g.order()) : g.order();
}

[[noreturn]] void weight_cap_hit(const SolverOptions& opts) {
    throw CapExceeded("no valid assignment within weight bound " + std::to_string(*opts.max_weight));
}

// Calls fn(sub) for every k-subset of m in lexicographic order of members;
// stops early when fn returns true.
template <class Fn>
bool for_each_subset_of_size(Mask m, int k, Fn& fn, Mask acc = 0) {
    if (k == 0)
        return fn(acc);
    while (popcount(m) >= k) {
        const int v = lowest(m);
        m &= m - 1;
        if (for_each_subset_of_size(m, k - 1, fn, acc | bit(v)))
            return true;
    }
    return false;
}

// Enumerates dominating vertex sets of a fixed size in lexicographic order.
class SupportSearch {
public:
    explicit SupportSearch(const Graph& g) : g_(g), n_(g.order()), all_(g.vertices()) {
        // frozen_[j]: vertices whose closed neighbourhood lies below index j,
        // so no vertex chosen at index >= j can dominate them.
        Mask acc = 0;
        std::array<Mask, kMaxOrder + 1> by_max{};
        for (int u = 0; u < n_; ++u) {
            const Mask cn = g.closed_neighbors(u);
            by_max[static_cast<std::size_t>(63 - std::countl_zero(cn))] |= bit(u);
            max_cover_ = std::max(max_cover_, popcount(cn));
        }
        for (int j = 0; j <= n_; ++j) {
            frozen_[static_cast<std::size_t>(j)] = acc;
            if (j < n_)
                acc |= by_max[static_cast<std::size_t>(j)];
        }
    }

    template <class Fn>
    bool run(int size, Fn& fn) const {
        return recurse(0, size, 0, 0, fn);
    }

private:
    template <class Fn>
    bool recurse(int next, int remaining, Mask chosen, Mask dominated, Fn& fn) const {
        const Mask undominated = all_ & ~dominated;
        if (remaining == 0)
            return undominated == 0 ? fn(chosen) : false;
        if (popcount(undominated) > remaining * max_cover_)
            return false;
        for (int v = next; v <= n_ - remaining; ++v) {
            if ((undominated & frozen_[static_cast<std::size_t>(v)]) != 0)
                break;
            if (recurse(v + 1, remaining - 1, chosen | bit(v), dominated | g_.closed_neighbors(v), fn))
                return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    Mask all_;
    int max_cover_ = 1;
    std::array<Mask, kMaxOrder + 1> frozen_{};
};

// Lexicographic comparison of two assignments encoded by a pair of masks
// where the per-vertex value is bit(lo) + 2 * bit(hi).
bool lex_less(Mask lo_a, Mask hi_a, Mask lo_b, Mask hi_b) {
    const Mask diff = (lo_a ^ lo_b) | (hi_a ^ hi_b);
    if (diff == 0)
        return false;
    const int v = lowest(diff);
    auto value = [v](Mask lo, Mask hi) { return ((lo >> v) & 1U) + 2 * ((hi >> v) & 1U); };
    return value(lo_a, hi_a) < value(lo_b, hi_b);
}

// Best assignment seen at the current weight level, kept as two masks.
struct Incumbent {
    bool found = false;
    Mask lo = 0;
    Mask hi = 0;

    void offer(Mask l, Mask h) {
        if (!found || lex_less(l, h, lo, hi)) {
            found = true;
            lo = l;
            hi = h;
        }
    }
};

enum class Mode { FirstHit, LexMin };

// Rainbow assignments of exact weight w, encoded as (colour-1 set,
// colour-2 set).
bool rainbow_level(const Graph& g, const SupportSearch& search, int w, Mode mode, Incumbent& best) {
    const int n = g.order();
    const Mask all = g.vertices();
    for (int s = (w + 1) / 2; s <= std::min(w, n); ++s) {
        const int doubles = w - s;
        auto on_support = [&](Mask support) {
            const Mask outside = all & ~support;
            auto on_doubles = [&](Mask both) {
                const Mask single = support & ~both;
                const Mask need = outside & ~g.open_neighborhood(both);
                std::array<Mask, kMaxOrder> reach{};
                int k = 0;
                bool feasible = true;
                for_each_bit(need, [&](int u) {
                    const Mask r = g.neighbors(u) & single;
                    feasible = feasible && popcount(r) >= 2;
                    reach[static_cast<std::size_t>(k++)] = r;
                });
                if (!feasible)
                    return false;
                Mask ones = single;
                while (true) {
                    const Mask twos = single & ~ones;
                    bool ok = true;
                    for (int i = 0; i < k && ok; ++i)
                        ok = (reach[static_cast<std::size_t>(i)] & ones) != 0 &&
                             (reach[static_cast<std::size_t>(i)] & twos) != 0;
                    if (ok) {
                        best.offer(both | ones, both | twos);
                        if (mode == Mode::FirstHit)
                            return true;
                    }
                    if (ones == 0)
                        break;
                    ones = (ones - 1) & single;
                }
                return false;
            };
            return for_each_subset_of_size(support, doubles, on_doubles);
        };
        if (search.run(s, on_support))
            return true;
    }
    return best.found;
}

// Weak Roman assignments of exact weight w, encoded as (positive set,
// value-2 set). Calls sink(positive, twos) for every valid one.
template <class Sink>
bool weak_roman_level(const Graph& g, const SupportSearch& search, int w, Sink& sink) {
    const int n = g.order();
    const Mask all = g.vertices();
    for (int s = (w + 1) / 2; s <= std::min(w, n); ++s) {
        const int twos = w - s;
        auto on_support = [&](Mask support) {
            // undefended: zero vertices that no value-1 neighbour can defend.
            std::array<Mask, kMaxOrder> cover_without{};
            for_each_bit(support, [&](int v) {
                cover_without[static_cast<std::size_t>(v)] = g.closed_neighborhood(support & ~bit(v));
            });
            Mask undefended = 0;
            for_each_bit(all & ~support, [&](int u) {
                const Mask cu = g.closed_neighbors(u);
                bool ok = false;
                for_each_bit(g.neighbors(u) & support, [&](int v) {
                    ok = ok || (cover_without[static_cast<std::size_t>(v)] | cu) == all;
                });
                if (!ok)
                    undefended |= bit(u);
            });
            if (twos == 0)
                return undefended == 0 ? sink(support, Mask{0}) : false;
            auto on_twos = [&](Mask heavy) {
                if ((undefended & ~g.open_neighborhood(heavy)) != 0)
                    return false;
                return sink(support, heavy);
            };
            return for_each_subset_of_size(support, twos, on_twos);
        };
        if (search.run(s, on_support))
            return true;
    }
    return false;
}

} // namespace

RainbowAssignment RainbowAssignment::from_masks(int order, Mask ones, Mask twos) {
    std::vector<RainbowLabel> labels(static_cast<std::size_t>(order), RainbowLabel::None);
    for (int v = 0; v < order; ++v)
        labels[static_cast<std::size_t>(v)] =
            static_cast<RainbowLabel>(((ones >> v) & 1U) | (((twos >> v) & 1U) << 1));
    return RainbowAssignment(std::move(labels));
}

int RainbowAssignment::weight() const {
    int w = 0;
    for (auto l : labels_)
        w += label_size(l);
    return w;
}

Mask RainbowAssignment::colour_class(int colour) const {
    const auto flag = static_cast<std::uint8_t>(colour == 1 ? 1 : 2);
    Mask m = 0;
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (static_cast<std::uint8_t>(labels_[v]) & flag)
            m |= bit(static_cast<int>(v));
    return m;
}

RainbowAssignment RainbowAssignment::swapped() const {
    return from_masks(size(), colour_class(2), colour_class(1));
}

WeakRomanAssignment::WeakRomanAssignment(std::vector<int> values) {
    values_.reserve(values.size());
    for (int x : values) {
        if (x < 0 || x > 2)
            throw RangeError("weak Roman value " + std::to_string(x) + " outside {0,1,2}");
        values_.push_back(static_cast<std::uint8_t>(x));
    }
}

WeakRomanAssignment WeakRomanAssignment::from_masks(int order, Mask positive, Mask twos) {
    std::vector<int> values(static_cast<std::size_t>(order), 0);
    for (int v = 0; v < order; ++v)
        values[static_cast<std::size_t>(v)] =
            static_cast<int>(((positive >> v) & 1U) + ((twos >> v) & 1U));
    return WeakRomanAssignment(std::move(values));
}

int WeakRomanAssignment::weight() const {
    int w = 0;
    for (auto x : values_)
        w += x;
    return w;
}

Mask WeakRomanAssignment::positive() const {
    Mask m = 0;
    for (std::size_t v = 0; v < values_.size(); ++v)
        if (values_[v] >= 1)
            m |= bit(static_cast<int>(v));
    return m;
}

Mask WeakRomanAssignment::twos() const {
    Mask m = 0;
    for (std::size_t v = 0; v < values_.size(); ++v)
        if (values_[v] == 2)
            m |= bit(static_cast<int>(v));
    return m;
}

bool is_dominating_set(const Graph& g, VertexSet d) {
    check_in_range(g, d);
    return g.closed_neighborhood(d.bits()) == g.vertices();
}

int domination_value(const Graph& g, const SolverOptions& opts) {
    check_order_cap(g, opts);
    const SupportSearch search(g);
    auto stop = [](Mask) { return true; };
    for (int s = 0; s <= weight_limit(g, opts); ++s)
        if (search.run(s, stop))
            return s;
    weight_cap_hit(opts);
}

SolveResult<VertexSet> domination_number(const Graph& g, const SolverOptions& opts) {
    check_order_cap(g, opts);
    const SupportSearch search(g);
    for (int s = 0; s <= weight_limit(g, opts); ++s) {
        Incumbent best;
        auto keep = [&](Mask d) {
            best.offer(d, 0);
            return false;
        };
        search.run(s, keep);
        if (best.found)
            return {s, VertexSet(best.lo)};
    }
    weight_cap_hit(opts);
}

Verdict validate_rainbow(const Graph& g, const RainbowAssignment& f) {
    check_length(g, f.size());
    const Mask ones = f.colour_class(1);
    const Mask twos = f.colour_class(2);
    const Mask empty = g.vertices() & ~(ones | twos);
    for (int u = 0; u < g.order(); ++u) {
        if (!(empty & bit(u)))
            continue;
        const Mask nb = g.neighbors(u);
        if ((nb & ones) == 0 || (nb & twos) == 0)
            return {false, u};
    }
    return {};
}

int rainbow_value(const Graph& g, const SolverOptions& opts) {
    check_order_cap(g, opts);
    const SupportSearch search(g);
    for (int w = 0; w <= weight_limit(g, opts); ++w) {
        Incumbent best;
        if (rainbow_level(g, search, w, Mode::FirstHit, best))
            return w;
    }
    weight_cap_hit(opts);
}

SolveResult<RainbowAssignment> rainbow_number(const Graph& g, const SolverOptions& opts) {
    check_order_cap(g, opts);
    const SupportSearch search(g);
    for (int w = 0; w <= weight_limit(g, opts); ++w) {
        Incumbent best;
        if (rainbow_level(g, search, w, Mode::LexMin, best))
            return {w, RainbowAssignment::from_masks(g.order(), best.lo, best.hi)};
    }
    weight_cap_hit(opts);
}

WeakRomanAssignment apply_move(const WeakRomanAssignment& gfun, int v, int u) {
    const int n = gfun.size();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw RangeError("move endpoint outside the assignment");
    if (u == v)
        throw PreconditionError("move needs two distinct vertices");
    if (gfun[v] == 0)
        throw PreconditionError("move source " + std::to_string(v) + " has value 0");
    if (gfun[u] >= 1)
        throw PreconditionError("move target " + std::to_string(u) + " already has positive value");
    std::vector<int> values(gfun.values().begin(), gfun.values().end());
    values[static_cast<std::size_t>(u)] += 1;
    values[static_cast<std::size_t>(v)] -= 1;
    return WeakRomanAssignment(std::move(values));
}

std::vector<int> apply_move_unchecked(std::span<const int> gfun, int v, int u) {
    const int n = static_cast<int>(gfun.size());
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw RangeError("move endpoint outside the assignment");
    if (u == v)
        throw PreconditionError("move needs two distinct vertices");
    std::vector<int> out(gfun.begin(), gfun.end());
    out[static_cast<std::size_t>(u)] += 1;
    out[static_cast<std::size_t>(v)] -= 1;
    return out;
}

Verdict validate_weak_roman(const Graph& g, const WeakRomanAssignment& gfun) {
    check_length(g, gfun.size());
    const Mask all = g.vertices();
    const Mask positive = gfun.positive();
    const Mask twos = gfun.twos();
    for (int u = 0; u < g.order(); ++u) {
        if (positive & bit(u))
            continue;
        bool defended = false;
        for_each_bit(g.neighbors(u) & positive, [&](int v) {
            if (defended)
                return;
            Mask after = positive | bit(u);
            if (!(twos & bit(v)))
                after &= ~bit(v);
            defended = g.closed_neighborhood(after) == all;
        });
        if (!defended)
            return {false, u};
    }
    return {};
}

int weak_roman_value(const Graph& g, const SolverOptions& opts) {
    check_order_cap(g, opts);
    const SupportSearch search(g);
    auto stop = [](Mask, Mask) { return true; };
    for (int w = 0; w <= weight_limit(g, opts); ++w)
        if (weak_roman_level(g, search, w, stop))
            return w;
    weight_cap_hit(opts);
}

SolveResult<WeakRomanAssignment> weak_roman_number(const Graph& g, const SolverOptions& opts) {
    check_order_cap(g, opts);
    const SupportSearch search(g);
    for (int w = 0; w <= weight_limit(g, opts); ++w) {
        Incumbent best;
        auto keep = [&](Mask positive, Mask twos) {
            // Encode value(v) = [v positive] + [v is a two] as (lo, hi) with
            // lo + 2*hi == value: lo = positive xor twos, hi = twos.
            best.offer(positive & ~twos, twos);
            return false;
        };
        weak_roman_level(g, search, w, keep);
        if (best.found)
            return {w, WeakRomanAssignment::from_masks(g.order(), best.lo | best.hi, best.hi)};
    }
    weight_cap_hit(opts);
}

int for_each_minimum_weak_roman(const Graph& g,
                                const std::function<void(const WeakRomanAssignment&)>& fn,
                                const SolverOptions& opts) {
    const int w = weak_roman_value(g, opts);
    const SupportSearch search(g);
    auto emit = [&](Mask positive, Mask twos) {
        fn(WeakRomanAssignment::from_masks(g.order(), positive, twos));
        return false;
    };
    weak_roman_level(g, search, w, emit);
    return w;
}

} // namespace domlab
