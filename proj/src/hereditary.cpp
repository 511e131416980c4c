#include "domlab/hereditary.hpp"

#include "domlab/domination.hpp"
#include "domlab/error.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace domlab {

namespace {

std::uint64_t memo_key(int order, std::uint64_t code) {
    return code | (static_cast<std::uint64_t>(order) << 58);
}

std::size_t shard_of(std::uint64_t key, std::size_t shards) {
    key ^= key >> 33;
    key *= 0xff51afd7ed558ccdULL;
    key ^= key >> 33;
    return static_cast<std::size_t>(key % shards);
}

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

SolverOptions unbounded_order() {
    SolverOptions opts;
    opts.max_order = kMaxOrder;
    return opts;
}

} // namespace

struct ParameterMemo::Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::uint64_t, ParameterPair> map;
};

ParameterMemo::ParameterMemo() {
    for (auto& s : shards_)
        s = std::make_unique<Shard>();
}

ParameterMemo::~ParameterMemo() = default;

ParameterPair solve_parameters(const Graph& g) {
    const SolverOptions opts = unbounded_order();
    return {weak_roman_value(g, opts), rainbow_value(g, opts)};
}

ParameterPair ParameterMemo::get(const Graph& g) {
    return get_induced(g, g.vertices());
}

ParameterPair ParameterMemo::get_induced(const Graph& g, Mask subset) {
    const int order = popcount(subset);
    if (order > kMaxCodeOrder)
        return solve_parameters(induced_subgraph(g, VertexSet(subset)));
    const std::uint64_t key = memo_key(order, induced_code(g, subset));
    Shard& shard = *shards_[shard_of(key, kShards)];
    {
        std::shared_lock lock(shard.mutex);
        if (auto it = shard.map.find(key); it != shard.map.end())
            return it->second;
    }
    const ParameterPair value = solve_parameters(Graph::from_code(order, induced_code(g, subset)));
    std::unique_lock lock(shard.mutex);
    shard.map.emplace(key, value);
    return value;
}

std::size_t ParameterMemo::size() const {
    std::size_t total = 0;
    for (const auto& s : shards_) {
        std::shared_lock lock(s->mutex);
        total += s->map.size();
    }
    return total;
}

HereditaryVerdict in_gk(const Graph& g, int k, const HereditaryOptions& opts) {
    if (k < 1)
        throw PreconditionError("in_gk: k must be positive, got " + std::to_string(k));
    if (g.order() > opts.max_order)
        throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds hereditary cap " +
                          std::to_string(opts.max_order));
    std::unique_ptr<ParameterMemo> local;
    ParameterMemo* memo = opts.memo;
    if (memo == nullptr) {
        local = std::make_unique<ParameterMemo>();
        memo = local.get();
    }

    HereditaryVerdict verdict;
    // Size 0 is skipped: gamma_r = 0 never reaches k >= 1.
    for (int size = 1; size <= g.order(); ++size) {
        auto check = [&](Mask subset) {
            const ParameterPair p = memo->get_induced(g, subset);
            if (p.gamma_r >= k && !p.extremal()) {
                verdict.member = false;
                verdict.witness = VertexSet(subset);
                verdict.witness_parameters = p;
                return true;
            }
            return false;
        };
        if (for_each_subset_of_size(g.vertices(), size, check))
            break;
    }
    return verdict;
}

FreenessResult is_free(const Graph& g, std::span<const Pattern> patterns) {
    for (Pattern p : patterns)
        if (auto hit = contains_induced(g, p))
            return {false, p, std::move(*hit)};
    return {};
}

bool check_theorem3(const Graph& g, const HereditaryOptions& opts) {
    return in_gk(g, 3, opts).member == is_free(g, kG3Forbidden).free;
}

} // namespace domlab
