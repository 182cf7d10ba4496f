#include "kfn/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kfn/errors.hpp"

namespace kfn {

PointForm form_of(const Point& p) noexcept {
    return std::holds_alternative<Vector>(p) ? PointForm::vector : PointForm::string;
}

double euclidean(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw UsageError("euclidean: dimension mismatch (" + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()) + ")");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double diff = u[i] - v[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    // Single rolling row over the shorter string.
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            const std::size_t subst = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({up + 1, row[j - 1] + 1, subst});
            diag = up;
        }
    }
    return row[b.size()];
}

double distance(const Point& u, const Point& v) {
    if (const auto* uv = std::get_if<Vector>(&u)) {
        if (const auto* vv = std::get_if<Vector>(&v)) return euclidean(*uv, *vv);
    } else if (const auto* vs = std::get_if<std::string>(&v)) {
        return static_cast<double>(levenshtein(std::get<std::string>(u), *vs));
    }
    throw UsageError("distance: cannot compare a vector point with a string point");
}

void check_compatible(const Point& p, PointForm form, std::size_t dim) {
    if (form_of(p) != form) {
        throw UsageError("point form does not match the dataset form");
    }
    if (form == PointForm::vector && std::get<Vector>(p).size() != dim) {
        throw UsageError("point dimension " + std::to_string(std::get<Vector>(p).size()) +
                         " does not match dataset dimension " + std::to_string(dim));
    }
}

Dataset::Dataset(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) return;
    form_ = form_of(points_.front());
    dim_ = form_ == PointForm::vector ? std::get<Vector>(points_.front()).size() : 0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        check_compatible(points_[i], form_, dim_);
        if (form_ == PointForm::vector) {
            for (double c : std::get<Vector>(points_[i])) {
                if (!std::isfinite(c)) {
                    throw UsageError("point " + std::to_string(i) + " has a non-finite coordinate");
                }
            }
        }
    }
}

}  // namespace kfn
