#include "kfn/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "kfn/errors.hpp"

namespace kfn {

namespace {

void check_dataset_query(const Dataset& data, const Point& q) {
    check_compatible(q, data.form(), data.dim());
}

// ranks[id] = 1-based position of id when sorted by (distance, id).
std::vector<std::size_t> distance_ranks(const Dataset& data, const Point& q) {
    std::vector<Hit> order(data.size());
    for (std::size_t id = 0; id < data.size(); ++id) {
        order[id] = {static_cast<PointId>(id), distance(q, data[static_cast<PointId>(id)])};
    }
    std::sort(order.begin(), order.end(), hit_before);
    std::vector<std::size_t> ranks(data.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) ranks[order[pos].id] = pos + 1;
    return ranks;
}

}  // namespace

SearchOutcome linear_scan_kfn(const Dataset& data, const FnQuery& query, std::size_t k) {
    for (const auto& q : query.queries()) check_dataset_query(data, q);
    KBestPool pool(k);
    DistanceCounter counter;
    for (std::size_t id = 0; id < data.size(); ++id) {
        const auto pid = static_cast<PointId>(id);
        pool.offer({pid, score(query, data[pid], counter)});
    }
    SearchOutcome out;
    out.hits = std::move(pool).take();
    out.distance_count = counter.count();
    return out;
}

std::size_t oracle_k(const Dataset& data, const Point& q, std::span<const PointId> targets) {
    if (targets.empty()) throw UsageError("oracle_k: target set is empty");
    for (PointId t : targets) {
        if (t >= data.size()) throw UsageError("oracle_k: unknown target id " + std::to_string(t));
    }
    check_dataset_query(data, q);
    const auto ranks = distance_ranks(data, q);
    std::size_t worst = 0;
    for (PointId t : targets) worst = std::max(worst, ranks[t]);
    return worst;
}

KfnOracle::KfnOracle(const Dataset& data, const FnQuery& query) {
    for (const auto& q : query.queries()) check_dataset_query(data, q);
    const std::size_t m = query.arity();
    std::vector<std::vector<double>> dist(m, std::vector<double>(data.size()));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t id = 0; id < data.size(); ++id) {
            dist[i][id] = distance(query.queries()[i], data[static_cast<PointId>(id)]);
        }
    }
    by_score_.resize(data.size());
    std::vector<double> x(m);
    for (std::size_t id = 0; id < data.size(); ++id) {
        for (std::size_t i = 0; i < m; ++i) x[i] = dist[i][id];
        by_score_[id] = {static_cast<PointId>(id), wowa(x, query.measure())};
    }
    std::sort(by_score_.begin(), by_score_.end(), hit_before);

    ranks_.resize(m);
    std::vector<PointId> order(data.size());
    for (std::size_t i = 0; i < m; ++i) {
        std::iota(order.begin(), order.end(), PointId{0});
        const auto& d = dist[i];
        std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
            return d[a] < d[b] || (d[a] == d[b] && a < b);
        });
        ranks_[i].resize(data.size());
        for (std::size_t pos = 0; pos < order.size(); ++pos) ranks_[i][order[pos]] = pos + 1;
    }
}

std::vector<Hit> KfnOracle::top(std::size_t k) const {
    if (k < 1) throw UsageError("k must be at least 1");
    const auto n = std::min(k, by_score_.size());
    return {by_score_.begin(), by_score_.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<std::size_t> KfnOracle::per_query_k(std::span<const Hit> targets) const {
    if (targets.empty()) throw UsageError("per_query_k: target set is empty");
    std::vector<std::size_t> ks(arity(), 0);
    for (std::size_t i = 0; i < arity(); ++i) {
        for (const auto& t : targets) ks[i] = std::max(ks[i], rank(i, t.id));
    }
    return ks;
}

MultiQueryOutcome separate_queries(const LcIndex& index, const FnQuery& query, std::size_t k,
                                   const KfnOracle& oracle, const SearchOptions& options) {
    const std::size_t m = query.arity();
    if (oracle.arity() != m) throw UsageError("separate_queries: oracle arity mismatch");
    const auto truth = oracle.top(k);

    MultiQueryOutcome out;
    out.per_query_k = oracle.per_query_k(truth);

    // id -> distances gathered from each kNN pass; only ids seen in every pass survive.
    std::unordered_map<PointId, std::vector<double>> seen;
    for (std::size_t i = 0; i < m; ++i) {
        const auto pass = knn_search(index, query.queries()[i], out.per_query_k[i], options);
        out.result.distance_count += pass.distance_count;
        if (i == 0) {
            for (const auto& h : pass.hits) seen[h.id].push_back(h.score);
            continue;
        }
        for (const auto& h : pass.hits) {
            auto it = seen.find(h.id);
            if (it != seen.end() && it->second.size() == i) it->second.push_back(h.score);
        }
    }

    KBestPool pool(k);
    for (const auto& [id, x] : seen) {
        if (x.size() == m) pool.offer({id, wowa(x, query.measure())});
    }
    out.result.hits = std::move(pool).take();
    if (out.result.hits != truth) {
        throw std::logic_error("separate_queries: intersection does not reproduce the true kFN set");
    }
    return out;
}

MultiQueryOutcome double_query(const LcIndex& index, const Point& q1, const Point& q2,
                               const WowaMeasure& measure, std::size_t k,
                               const SearchOptions& options) {
    if (measure.arity() != 2) throw UsageError("double_query: measure must have arity 2");
    FnQuery query({q1, q2}, measure);
    KfnOracle oracle(index.data(), query);
    return separate_queries(index, query, k, oracle, options);
}

}  // namespace kfn
