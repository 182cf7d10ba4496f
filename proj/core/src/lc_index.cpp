#include "kfn/lc_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "kfn/errors.hpp"

namespace kfn {

LcIndex::LcIndex(std::shared_ptr<const Dataset> data, std::vector<Cluster> clusters,
                 std::size_t bucket_size, std::uint64_t build_distance_count)
    : data_(std::move(data)),
      clusters_(std::move(clusters)),
      bucket_size_(bucket_size),
      build_distance_count_(build_distance_count) {
    if (!data_) throw UsageError("lc index: null dataset");
    std::vector<bool> seen(data_->size(), false);
    auto claim = [&](PointId id) {
        if (id >= seen.size()) throw UsageError("lc index: point id out of range");
        if (seen[id]) throw UsageError("lc index: point " + std::to_string(id) + " appears twice");
        seen[id] = true;
    };
    for (const auto& c : clusters_) {
        if (!(c.covering_radius >= 0.0)) throw UsageError("lc index: negative covering radius");
        claim(c.center);
        for (PointId id : c.bucket) claim(id);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw UsageError("lc index: clusters do not cover every point");
    }
}

LcIndex build_lc_index(std::shared_ptr<const Dataset> data, const BuildOptions& options) {
    if (!data || data->empty()) throw UsageError("build: dataset must be nonempty");
    if (options.bucket_size < 1) throw UsageError("build: bucket size must be at least 1");
    if (data->size() > std::numeric_limits<PointId>::max()) {
        throw UsageError("build: dataset too large for 32-bit point ids");
    }
    const Dataset& points = *data;

    std::vector<PointId> remaining(points.size());
    std::iota(remaining.begin(), remaining.end(), PointId{0});
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        std::shuffle(remaining.begin(), remaining.end(), rng);
    }
    const bool use_sum = options.selection == CenterSelection::max_sum_distance;
    // Per remaining point: summed (or minimum) distance to the centers chosen so far.
    std::vector<double> spread(remaining.size(),
                               use_sum ? 0.0 : std::numeric_limits<double>::infinity());

    DistanceCounter build_counter;
    std::vector<Cluster> clusters;
    std::size_t center_pos = 0;
    std::vector<double> dist;
    std::vector<std::size_t> order;

    while (!remaining.empty()) {
        Cluster cluster;
        cluster.center = remaining[center_pos];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(center_pos));
        spread.erase(spread.begin() + static_cast<std::ptrdiff_t>(center_pos));

        const Point& c = points[cluster.center];
        dist.resize(remaining.size());
        for (std::size_t j = 0; j < remaining.size(); ++j) {
            dist[j] = counted_distance(build_counter, c, points[remaining[j]]);
        }

        if (remaining.size() <= options.bucket_size) {
            cluster.bucket = remaining;
            cluster.covering_radius =
                dist.empty() ? 0.0 : *std::max_element(dist.begin(), dist.end());
            std::sort(cluster.bucket.begin(), cluster.bucket.end());
            clusters.push_back(std::move(cluster));
            break;
        }

        order.resize(remaining.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        const auto nth = order.begin() + static_cast<std::ptrdiff_t>(options.bucket_size - 1);
        std::nth_element(order.begin(), nth, order.end(), [&](std::size_t a, std::size_t b) {
            return dist[a] < dist[b] || (dist[a] == dist[b] && remaining[a] < remaining[b]);
        });
        cluster.covering_radius = dist[*nth];

        std::vector<PointId> kept;
        std::vector<double> kept_spread;
        kept.reserve(remaining.size());
        kept_spread.reserve(remaining.size());
        for (std::size_t j = 0; j < remaining.size(); ++j) {
            if (dist[j] <= cluster.covering_radius) {
                cluster.bucket.push_back(remaining[j]);
            } else {
                kept.push_back(remaining[j]);
                kept_spread.push_back(use_sum ? spread[j] + dist[j] : std::min(spread[j], dist[j]));
            }
        }
        std::sort(cluster.bucket.begin(), cluster.bucket.end());
        clusters.push_back(std::move(cluster));
        remaining = std::move(kept);
        spread = std::move(kept_spread);

        // First maximum wins, so ties go to the earlier point in build order.
        center_pos = static_cast<std::size_t>(
            std::max_element(spread.begin(), spread.end()) - spread.begin());
    }

    const std::size_t bucket_size = options.bucket_size;
    return LcIndex(std::move(data), std::move(clusters), bucket_size, build_counter.count());
}

KBestPool::KBestPool(std::size_t k) : k_(k) {
    if (k_ < 1) throw UsageError("k must be at least 1");
}

void KBestPool::offer(Hit hit) {
    if (!full()) {
        heap_.push_back(hit);
        std::push_heap(heap_.begin(), heap_.end(), hit_before);
        return;
    }
    if (!hit_before(hit, heap_.front())) return;
    std::pop_heap(heap_.begin(), heap_.end(), hit_before);
    heap_.back() = hit;
    std::push_heap(heap_.begin(), heap_.end(), hit_before);
}

SearchRadius KBestPool::radius() const {
    return full() ? SearchRadius::bounded(heap_.front().score) : SearchRadius::unbounded();
}

std::vector<Hit> KBestPool::take() && {
    std::sort_heap(heap_.begin(), heap_.end(), hit_before);
    return std::move(heap_);
}

namespace {

void check_query_matches(const LcIndex& index, const FnQuery& query) {
    for (const auto& q : query.queries()) {
        check_compatible(q, index.data().form(), index.data().dim());
    }
}

}  // namespace

SearchOutcome kfn_search(const LcIndex& index, FnQuery query, std::size_t k,
                         const SearchOptions& options) {
    check_query_matches(index, query);
    KBestPool pool(k);
    DistanceCounter counter;
    SearchOutcome out;
    query.set_radius(SearchRadius::unbounded());
    const Dataset& points = index.data();

    for (const auto& cluster : index.clusters()) {
        ++out.clusters_visited;
        const auto x = pivot_distances(query, points[cluster.center], counter);
        pool.offer({cluster.center, wowa(x, query.measure())});
        query.set_radius(pool.radius());

        if (ball_overlap(query, x, cluster.covering_radius)) {
            for (PointId id : cluster.bucket) {
                pool.offer({id, score(query, points[id], counter)});
                query.set_radius(pool.radius());
            }
        }
        if (query_inside_ball(query, x, cluster.covering_radius, options.containment)) {
            out.halted_early = &cluster != &index.clusters().back();
            break;
        }
    }

    out.hits = std::move(pool).take();
    out.distance_count = counter.count();
    return out;
}

SearchOutcome knn_search(const LcIndex& index, const Point& q, std::size_t k,
                         const SearchOptions& options) {
    FnQuery query({q}, WowaMeasure(WeightVector({1.0})));
    return kfn_search(index, std::move(query), k, options);
}

RangeOutcome range_search(const LcIndex& index, const FnQuery& query, const RangeOptions& options) {
    check_query_matches(index, query);
    if (!query.radius().is_bounded()) throw UsageError("range search: radius must be bounded");
    DistanceCounter counter;
    RangeOutcome out;
    const Dataset& points = index.data();
    const double s = query.radius().value();

    for (const auto& cluster : index.clusters()) {
        const auto x = pivot_distances(query, points[cluster.center], counter);
        if (wowa(x, query.measure()) <= s) out.ids.push_back(cluster.center);

        if (options.fast_accept && ball_inside_query(query, x, cluster.covering_radius)) {
            out.ids.insert(out.ids.end(), cluster.bucket.begin(), cluster.bucket.end());
        } else if (ball_overlap(query, x, cluster.covering_radius)) {
            for (PointId id : cluster.bucket) {
                if (score(query, points[id], counter) <= s) out.ids.push_back(id);
            }
        }
        if (query_inside_ball(query, x, cluster.covering_radius, options.containment)) {
            out.halted_early = &cluster != &index.clusters().back();
            break;
        }
    }

    std::sort(out.ids.begin(), out.ids.end());
    out.distance_count = counter.count();
    return out;
}

}  // namespace kfn
