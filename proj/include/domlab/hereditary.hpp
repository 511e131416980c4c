#pragma once

#include "domlab/graph.hpp"
#include "domlab/patterns.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace domlab {

/// Exact (gamma_r, gamma_r2) of a labeled graph.
struct ParameterPair {
    int gamma_r = 0;
    int gamma_r2 = 0;

    bool extremal() const noexcept { return gamma_r2 == 2 * gamma_r; }
};

/// Thread-safe cache of exact parameters keyed by (order, adjacency code).
/// Entries never change once written, so concurrent readers only contend
/// on the shard lock.
class ParameterMemo {
public:
    ParameterMemo();
    ~ParameterMemo();
    ParameterMemo(const ParameterMemo&) = delete;
    ParameterMemo& operator=(const ParameterMemo&) = delete;

    /// Requires g.order() <= kMaxCodeOrder.
    ParameterPair get(const Graph& g);
    /// Looks up the subgraph induced by `subset`, solving it on a miss.
    ParameterPair get_induced(const Graph& g, Mask subset);

    std::size_t size() const;

private:
    struct Shard;
    static constexpr std::size_t kShards = 64;
    std::array<std::unique_ptr<Shard>, kShards> shards_;
};

/// Parameters of g computed directly, bypassing any memo.
ParameterPair solve_parameters(const Graph& g);

struct HereditaryVerdict {
    bool member = true;
    /// On non-membership: a smallest vertex set H (lexicographically first
    /// among those of minimum size) with gamma_r(G[H]) >= k and
    /// gamma_r2(G[H]) != 2 gamma_r(G[H]).
    std::optional<VertexSet> witness;
    ParameterPair witness_parameters;
};

struct HereditaryOptions {
    int max_order = 10;
    /// Shared cache; a private one is used per call when null.
    ParameterMemo* memo = nullptr;
};

inline constexpr int kDefaultHereditaryMaxOrder = 10;

/// Membership in the class of graphs all of whose induced subgraphs H with
/// gamma_r(H) >= k satisfy gamma_r2(H) = 2 gamma_r(H). Induced subgraphs
/// are scanned by increasing size.
HereditaryVerdict in_gk(const Graph& g, int k, const HereditaryOptions& opts = {});

struct FreenessResult {
    bool free = true;
    std::optional<Pattern> pattern;
    std::vector<int> embedding;

    explicit operator bool() const noexcept { return free; }
};

/// Checks the patterns in the given order and reports the first hit.
FreenessResult is_free(const Graph& g, std::span<const Pattern> patterns);

/// The pair {co-K3, C5}.
inline constexpr std::array<Pattern, 2> kG3Forbidden{Pattern::EmptyTriple, Pattern::C5};

/// in_gk(g, 3) membership agrees with {co-K3, C5}-freeness. A false result
/// flags a defect in one of the two routes.
bool check_theorem3(const Graph& g, const HereditaryOptions& opts = {});

} // namespace domlab
