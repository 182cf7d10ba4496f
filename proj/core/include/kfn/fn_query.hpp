#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "kfn/metric.hpp"
#include "kfn/owa.hpp"

namespace kfn {

/// Search radius of a fairest-neighbor query. Starts unbounded until k
/// candidates exist; only then does it carry a finite value.
class SearchRadius {
public:
    static SearchRadius unbounded() noexcept { return SearchRadius(); }
    static SearchRadius bounded(double s);

    bool is_bounded() const noexcept { return bounded_; }
    /// +infinity when unbounded.
    double value() const noexcept {
        return bounded_ ? value_ : std::numeric_limits<double>::infinity();
    }

private:
    SearchRadius() = default;
    double value_ = 0.0;
    bool bounded_ = false;
};

/// The k-fairest-neighbor query region {o : wowa([d(q_i, o)]_i) <= s}.
///
/// Holds m query objects, an unfairness measure over their m distances, and
/// the current radius s. A query instance belongs to one search at a time.
class FnQuery {
public:
    /// Throws UsageError if the arity differs from the number of query
    /// objects, the query objects are of mixed form, or the weights are not
    /// nondecreasing.
    FnQuery(std::vector<Point> queries, WowaMeasure measure,
            SearchRadius radius = SearchRadius::unbounded());

    std::size_t arity() const noexcept { return queries_.size(); }
    const std::vector<Point>& queries() const noexcept { return queries_; }
    const WowaMeasure& measure() const noexcept { return measure_; }
    PointForm form() const noexcept { return form_of(queries_.front()); }

    const SearchRadius& radius() const noexcept { return radius_; }
    void set_radius(SearchRadius radius) noexcept { radius_ = radius; }

private:
    std::vector<Point> queries_;
    WowaMeasure measure_;
    SearchRadius radius_;
};

/// Axis of the pivot-space vector x = [d(q_i, o)]_i; m counted distances.
std::vector<double> pivot_distances(const FnQuery& query, const Point& o, DistanceCounter& counter);

/// wowa of the distances from every query object to o. Charges m distances.
double score(const FnQuery& query, const Point& o, DistanceCounter& counter);

/// Can the ball with center distances x and radius r hold a point scoring <= s?
///
/// Uses the clamped lower-bound corner l_i = max(0, x_i - r). Never false
/// when such a point exists.
bool ball_overlap(const FnQuery& query, std::span<const double> x, double r);

enum class ContainmentMode { weak, strong };

/// Does the whole query region lie inside the ball?
///
/// weak:   r - wowa_facet(x, ascending)  >= s
/// strong: r - wowa_facet(x, descending) >= s
/// Always false while the radius is unbounded.
bool query_inside_ball(const FnQuery& query, std::span<const double> x, double r,
                       ContainmentMode mode);

/// Upper-corner test: every point of the ball scores <= s, since
/// d(q_i, o) <= x_i + r for all members.
bool ball_inside_query(const FnQuery& query, std::span<const double> x, double r);

}  // namespace kfn
