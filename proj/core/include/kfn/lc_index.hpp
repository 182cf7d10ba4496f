#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "kfn/fn_query.hpp"
#include "kfn/metric.hpp"

namespace kfn {

/// One ball of the list of clusters. Bucket members are within
/// covering_radius of the center; the center itself is not in the bucket.
struct Cluster {
    PointId center = 0;
    double covering_radius = 0.0;
    std::vector<PointId> bucket;
};

/// How the next center is picked among the remaining points.
enum class CenterSelection {
    max_sum_distance,  ///< maximize the sum of distances to all previous centers
    max_min_distance,  ///< maximize the distance to the closest previous center
};

struct BuildOptions {
    std::size_t bucket_size = 20;
    CenterSelection selection = CenterSelection::max_sum_distance;
    /// When set, the dataset order is shuffled with this seed before
    /// construction; otherwise the first dataset element is the first center.
    std::optional<std::uint64_t> shuffle_seed;
};

/// List-of-Clusters index over an immutable dataset.
///
/// Points in later clusters lie strictly outside the balls of all earlier
/// clusters. Immutable after construction; safe to search concurrently.
class LcIndex {
public:
    /// Assembles an index from parts; throws UsageError unless the clusters
    /// partition the dataset ids.
    LcIndex(std::shared_ptr<const Dataset> data, std::vector<Cluster> clusters,
            std::size_t bucket_size, std::uint64_t build_distance_count);

    const Dataset& data() const noexcept { return *data_; }
    std::shared_ptr<const Dataset> shared_data() const noexcept { return data_; }
    const std::vector<Cluster>& clusters() const noexcept { return clusters_; }
    std::size_t bucket_size() const noexcept { return bucket_size_; }
    /// Distances computed during construction; never part of query costs.
    std::uint64_t build_distance_count() const noexcept { return build_distance_count_; }

private:
    std::shared_ptr<const Dataset> data_;
    std::vector<Cluster> clusters_;
    std::size_t bucket_size_;
    std::uint64_t build_distance_count_;
};

LcIndex build_lc_index(std::shared_ptr<const Dataset> data, const BuildOptions& options = {});

struct Hit {
    PointId id = 0;
    double score = 0.0;

    friend bool operator==(const Hit&, const Hit&) = default;
};

/// Orders hits by score, then by id.
constexpr bool hit_before(const Hit& a, const Hit& b) noexcept {
    return a.score < b.score || (a.score == b.score && a.id < b.id);
}

/// The k best hits seen so far, as a max-heap on (score, id).
class KBestPool {
public:
    explicit KBestPool(std::size_t k);

    void offer(Hit hit);
    std::size_t size() const noexcept { return heap_.size(); }
    bool full() const noexcept { return heap_.size() == k_; }
    /// Unbounded until k hits are held, then the k-th best score.
    SearchRadius radius() const;
    /// The held hits sorted by (score, id).
    std::vector<Hit> take() &&;

private:
    std::size_t k_;
    std::vector<Hit> heap_;
};

struct SearchOptions {
    ContainmentMode containment = ContainmentMode::strong;
};

struct SearchOutcome {
    std::vector<Hit> hits;  ///< sorted by (score, id)
    std::uint64_t distance_count = 0;
    bool halted_early = false;
    std::size_t clusters_visited = 0;
};

/// Exact k fairest neighbors of the query's objects over the index.
///
/// The query's radius is reset to unbounded and shrinks as candidates are
/// found. k larger than the dataset returns every point ranked.
SearchOutcome kfn_search(const LcIndex& index, FnQuery query, std::size_t k,
                         const SearchOptions& options = {});

/// Classic k nearest neighbors: kfn_search with a single query object.
SearchOutcome knn_search(const LcIndex& index, const Point& q, std::size_t k,
                         const SearchOptions& options = {});

struct RangeOptions {
    ContainmentMode containment = ContainmentMode::strong;
    /// Report whole buckets without scoring their members when the ball lies
    /// entirely inside the query region.
    bool fast_accept = false;
};

struct RangeOutcome {
    std::vector<PointId> ids;  ///< ascending
    std::uint64_t distance_count = 0;
    bool halted_early = false;
};

/// All points scoring <= the query's (bounded) radius.
RangeOutcome range_search(const LcIndex& index, const FnQuery& query,
                          const RangeOptions& options = {});

}  // namespace kfn
