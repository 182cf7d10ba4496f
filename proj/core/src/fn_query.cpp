#include "kfn/fn_query.hpp"

#include <algorithm>
#include <cmath>

#include "kfn/errors.hpp"

namespace kfn {

SearchRadius SearchRadius::bounded(double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw UsageError("search radius must be finite and nonnegative");
    }
    SearchRadius r;
    r.value_ = s;
    r.bounded_ = true;
    return r;
}

FnQuery::FnQuery(std::vector<Point> queries, WowaMeasure measure, SearchRadius radius)
    : queries_(std::move(queries)), measure_(std::move(measure)), radius_(radius) {
    if (queries_.empty()) throw UsageError("fn query: needs at least one query object");
    if (queries_.size() != measure_.arity()) {
        throw UsageError("fn query: measure arity " + std::to_string(measure_.arity()) +
                         " does not match " + std::to_string(queries_.size()) + " query objects");
    }
    if (!measure_.is_unfairness()) {
        throw UsageError("fn query: weights must be nondecreasing (an unfairness measure)");
    }
    const PointForm f = form_of(queries_.front());
    const std::size_t dim = f == PointForm::vector ? std::get<Vector>(queries_.front()).size() : 0;
    for (const auto& q : queries_) check_compatible(q, f, dim);
}

std::vector<double> pivot_distances(const FnQuery& query, const Point& o, DistanceCounter& counter) {
    std::vector<double> x;
    x.reserve(query.arity());
    for (const auto& q : query.queries()) x.push_back(counted_distance(counter, q, o));
    return x;
}

double score(const FnQuery& query, const Point& o, DistanceCounter& counter) {
    return wowa(pivot_distances(query, o, counter), query.measure());
}

bool ball_overlap(const FnQuery& query, std::span<const double> x, double r) {
    if (!query.radius().is_bounded()) return true;
    std::vector<double> lower(x.size());
    std::transform(x.begin(), x.end(), lower.begin(),
                   [r](double xi) { return std::max(0.0, xi - r); });
    return wowa(lower, query.measure()) <= query.radius().value();
}

bool query_inside_ball(const FnQuery& query, std::span<const double> x, double r,
                       ContainmentMode mode) {
    if (!query.radius().is_bounded()) return false;
    const FacetOrder order =
        mode == ContainmentMode::strong ? FacetOrder::descending : FacetOrder::ascending;
    return r - wowa_facet(x, query.measure(), order) >= query.radius().value();
}

bool ball_inside_query(const FnQuery& query, std::span<const double> x, double r) {
    if (!query.radius().is_bounded()) return true;
    std::vector<double> upper(x.size());
    std::transform(x.begin(), x.end(), upper.begin(), [r](double xi) { return xi + r; });
    return wowa(upper, query.measure()) <= query.radius().value();
}

}  // namespace kfn
