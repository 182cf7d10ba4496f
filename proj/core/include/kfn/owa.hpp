#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kfn {

namespace detail {

/// Nonnegative entries in [0,1] summing to one.
class Weighting {
public:
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

protected:
    Weighting() = default;
    explicit Weighting(std::vector<double> values, const char* what);
    static std::vector<double> normalize(std::vector<double> raw, const char* what);

private:
    std::vector<double> values_;
};

}  // namespace detail

/// OWA weights, applied by rank. Nondecreasing weights give an unfairness
/// measure: larger distances get more weight.
class WeightVector : public detail::Weighting {
public:
    /// Entries must lie in [0,1] and sum to 1 within 1e-12.
    explicit WeightVector(std::vector<double> w);
    /// Accepts any nonnegative entries with a positive sum, e.g. {1, 3}.
    static WeightVector normalized(std::vector<double> raw);
    static WeightVector uniform(std::size_t m);

    bool nondecreasing() const noexcept;
    /// w' with w'_i = w_{m-i+1}.
    WeightVector reversed() const;
};

/// Per-criterion importances (one per query object).
class ImportanceVector : public detail::Weighting {
public:
    explicit ImportanceVector(std::vector<double> p);
    static ImportanceVector normalized(std::vector<double> raw);
    static ImportanceVector uniform(std::size_t m);
};

/// The interpolation function φ of w, evaluated at t ∈ [0,1].
///
/// φ(0) = 0 and φ(i/m) = w_m + w_{m-1} + ... + w_{m-i+1}, linear between knots.
double phi(double t, const WeightVector& w);

/// Ordered weighted average: w · (x sorted ascending).
double owa(std::span<const double> x, const WeightVector& w);

enum class FacetOrder { ascending, descending };

/// Weighted OWA with importance vector p and rank weights w.
///
/// Immutable once constructed. Weight validation happens here so that
/// evaluation does no checking beyond the arity.
class WowaMeasure {
public:
    WowaMeasure(ImportanceVector p, WeightVector w);
    /// Uniform importances; reduces to plain OWA.
    explicit WowaMeasure(WeightVector w);

    std::size_t arity() const noexcept { return w_.size(); }
    const ImportanceVector& importance() const noexcept { return p_; }
    const WeightVector& weights() const noexcept { return w_; }
    /// True when w is nondecreasing, i.e. the measure penalizes unequal distances.
    bool is_unfairness() const noexcept { return unfairness_; }

    /// φ of this measure's weights; t is clamped into [0,1].
    double phi_clamped(double t) const noexcept;

private:
    ImportanceVector p_;
    WeightVector w_;
    std::vector<double> knots_;  // φ(i/m), i = 0..m
    bool unfairness_;
};

double wowa(std::span<const double> x, const WowaMeasure& measure);

/// Evaluates the WOWA sum with the permutation that sorts x in the given order.
///
/// For nondecreasing w, the ascending facet is the largest of all m! facet rows
/// applied to x (and equals wowa(x)); the descending facet is the smallest.
/// Throws UsageError if the measure's weights are not nondecreasing.
double wowa_facet(std::span<const double> x, const WowaMeasure& measure, FacetOrder order);

}  // namespace kfn
