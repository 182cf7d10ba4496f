#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kfn {

using PointId = std::uint32_t;
using Vector = std::vector<double>;

/// A database or query object: a real vector or a character string.
using Point = std::variant<Vector, std::string>;

enum class PointForm { vector, string };

PointForm form_of(const Point& p) noexcept;

/// L2 distance. Throws UsageError on dimension mismatch.
double euclidean(std::span<const double> u, std::span<const double> v);

/// Edit distance with unit-cost insertion, deletion and substitution.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Dispatches on the point form: Euclidean for vectors, Levenshtein
/// (widened to double) for strings. Mixed forms are a UsageError.
double distance(const Point& u, const Point& v);

/// Number of metric evaluations charged to one query (or one index build).
class DistanceCounter {
public:
    std::uint64_t count() const noexcept { return count_; }
    void reset() noexcept { count_ = 0; }
    void add(std::uint64_t n) noexcept { count_ += n; }

private:
    std::uint64_t count_ = 0;
};

inline double counted_distance(DistanceCounter& counter, const Point& u, const Point& v) {
    double d = distance(u, v);
    counter.add(1);
    return d;
}

/// A homogeneous, validated collection of points addressed by PointId.
///
/// All points share one form; vector points share one dimensionality and
/// carry only finite coordinates.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    PointForm form() const noexcept { return form_; }
    /// Vector dimensionality; 0 for string datasets.
    std::size_t dim() const noexcept { return dim_; }

    const Point& operator[](PointId id) const { return points_[id]; }
    const std::vector<Point>& points() const noexcept { return points_; }

private:
    std::vector<Point> points_;
    PointForm form_ = PointForm::vector;
    std::size_t dim_ = 0;
};

/// Throws UsageError unless p has the given form (and dimension, for vectors).
void check_compatible(const Point& p, PointForm form, std::size_t dim);

}  // namespace kfn
