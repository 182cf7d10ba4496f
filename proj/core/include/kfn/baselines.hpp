#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kfn/fn_query.hpp"
#include "kfn/lc_index.hpp"

namespace kfn {

/// Scores every point. distance_count is exactly m * N; the result is the
/// reference that indexed searches must reproduce.
SearchOutcome linear_scan_kfn(const Dataset& data, const FnQuery& query, std::size_t k);

/// Largest 1-based rank (distance from q, ties by id) of any target: the
/// smallest k for which a kNN search around q returns every target.
std::size_t oracle_k(const Dataset& data, const Point& q, std::span<const PointId> targets);

/// Exhaustive rankings for one fairest-neighbor query, computed without
/// charging any distance counter. Shared by all k of one query group.
class KfnOracle {
public:
    KfnOracle(const Dataset& data, const FnQuery& query);

    std::size_t arity() const noexcept { return ranks_.size(); }
    /// The true k fairest neighbors, sorted by (score, id).
    std::vector<Hit> top(std::size_t k) const;
    /// 1-based rank of a point in the distance ordering from query object i.
    std::size_t rank(std::size_t i, PointId id) const { return ranks_[i][id]; }
    /// Per-query-object k that makes every target appear in that object's kNN.
    std::vector<std::size_t> per_query_k(std::span<const Hit> targets) const;

private:
    std::vector<Hit> by_score_;
    std::vector<std::vector<std::size_t>> ranks_;
};

struct MultiQueryOutcome {
    SearchOutcome result;                  ///< distance_count sums all kNN passes
    std::vector<std::size_t> per_query_k;  ///< the oracle-chosen k for each query object
};

/// Oracle-assisted separate-query baseline.
///
/// Runs one kNN search per query object with the smallest k that still
/// contains the true kFN set, then ranks the intersection of the results by
/// the measure. The oracle's own cost is not charged. Throws std::logic_error
/// if the intersection does not reproduce the true kFN set.
MultiQueryOutcome separate_queries(const LcIndex& index, const FnQuery& query, std::size_t k,
                                   const KfnOracle& oracle, const SearchOptions& options = {});

/// The two-object form: knn(q1, k1) and knn(q2, k2) intersected.
MultiQueryOutcome double_query(const LcIndex& index, const Point& q1, const Point& q2,
                               const WowaMeasure& measure, std::size_t k,
                               const SearchOptions& options = {});

}  // namespace kfn
