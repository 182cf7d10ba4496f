#include "kfn/owa.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "kfn/errors.hpp"

namespace kfn {

namespace {

constexpr double kSumTolerance = 1e-12;

void check_entries(const std::vector<double>& v, const char* what) {
    if (v.empty()) throw UsageError(std::string(what) + ": must have at least one entry");
    for (double e : v) {
        if (!std::isfinite(e) || e < 0.0 || e > 1.0) {
            throw UsageError(std::string(what) + ": entries must lie in [0,1]");
        }
    }
}

// Index permutation with a stack buffer for the common small arities.
class Permutation {
public:
    explicit Permutation(std::size_t m) : m_(m) {
        if (m_ > small_.size()) heap_.resize(m_);
        std::iota(data(), data() + m_, std::uint32_t{0});
    }
    std::uint32_t* data() noexcept { return m_ > small_.size() ? heap_.data() : small_.data(); }
    std::uint32_t operator[](std::size_t i) noexcept { return data()[i]; }

    void sort_by(std::span<const double> x, FacetOrder order) {
        auto* first = data();
        if (order == FacetOrder::ascending) {
            std::stable_sort(first, first + m_, [&](auto a, auto b) { return x[a] < x[b]; });
        } else {
            std::stable_sort(first, first + m_, [&](auto a, auto b) { return x[a] > x[b]; });
        }
    }

private:
    std::size_t m_;
    std::array<std::uint32_t, 16> small_{};
    std::vector<std::uint32_t> heap_;
};

double evaluate_sorted(std::span<const double> x, const WowaMeasure& measure, FacetOrder order) {
    const std::size_t m = measure.arity();
    if (x.size() != m) {
        throw UsageError("wowa: expected " + std::to_string(m) + " values, got " +
                         std::to_string(x.size()));
    }
    Permutation sigma(m);
    sigma.sort_by(x, order);
    const auto p = measure.importance().values();
    // Walk from the back: tail = sum_{k=i..m} p_sigma(k).
    double result = 0.0;
    double tail_after = 0.0;
    double phi_after = 0.0;
    for (std::size_t i = m; i-- > 0;) {
        const std::uint32_t idx = sigma[i];
        const double tail = i == 0 ? 1.0 : tail_after + p[idx];
        const double phi_here = measure.phi_clamped(tail);
        result += (phi_here - phi_after) * x[idx];
        tail_after = tail;
        phi_after = phi_here;
    }
    return result;
}

}  // namespace

namespace detail {

Weighting::Weighting(std::vector<double> values, const char* what) : values_(std::move(values)) {
    check_entries(values_, what);
    const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw UsageError(std::string(what) + ": entries must sum to 1 (got " + std::to_string(sum) +
                         ")");
    }
}

std::vector<double> Weighting::normalize(std::vector<double> raw, const char* what) {
    if (raw.empty()) throw UsageError(std::string(what) + ": must have at least one entry");
    double sum = 0.0;
    for (double e : raw) {
        if (!std::isfinite(e) || e < 0.0) {
            throw UsageError(std::string(what) + ": raw weights must be finite and nonnegative");
        }
        sum += e;
    }
    if (!(sum > 0.0)) throw UsageError(std::string(what) + ": raw weights must have a positive sum");
    for (double& e : raw) e /= sum;
    return raw;
}

}  // namespace detail

WeightVector::WeightVector(std::vector<double> w) : Weighting(std::move(w), "weight vector") {}

WeightVector WeightVector::normalized(std::vector<double> raw) {
    return WeightVector(normalize(std::move(raw), "weight vector"));
}

WeightVector WeightVector::uniform(std::size_t m) {
    return normalized(std::vector<double>(m, 1.0));
}

bool WeightVector::nondecreasing() const noexcept {
    const auto v = values();
    return std::is_sorted(v.begin(), v.end());
}

WeightVector WeightVector::reversed() const {
    const auto v = values();
    return WeightVector(std::vector<double>(v.rbegin(), v.rend()));
}

ImportanceVector::ImportanceVector(std::vector<double> p)
    : Weighting(std::move(p), "importance vector") {}

ImportanceVector ImportanceVector::normalized(std::vector<double> raw) {
    return ImportanceVector(normalize(std::move(raw), "importance vector"));
}

ImportanceVector ImportanceVector::uniform(std::size_t m) {
    return normalized(std::vector<double>(m, 1.0));
}

double phi(double t, const WeightVector& w) {
    if (!(t >= 0.0 && t <= 1.0)) throw UsageError("phi: argument must lie in [0,1]");
    return WowaMeasure(w).phi_clamped(t);
}

double owa(std::span<const double> x, const WeightVector& w) {
    if (x.size() != w.size()) {
        throw UsageError("owa: expected " + std::to_string(w.size()) + " values, got " +
                         std::to_string(x.size()));
    }
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    double result = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) result += w[i] * sorted[i];
    return result;
}

WowaMeasure::WowaMeasure(ImportanceVector p, WeightVector w)
    : p_(std::move(p)), w_(std::move(w)), unfairness_(w_.nondecreasing()) {
    if (p_.size() != w_.size()) {
        throw UsageError("wowa measure: importance and weight vectors differ in length");
    }
    const std::size_t m = w_.size();
    knots_.resize(m + 1);
    knots_[0] = 0.0;
    for (std::size_t i = 1; i <= m; ++i) knots_[i] = knots_[i - 1] + w_[m - i];
    knots_[m] = 1.0;
}

WowaMeasure::WowaMeasure(WeightVector w) : WowaMeasure(ImportanceVector::uniform(w.size()), w) {}

double WowaMeasure::phi_clamped(double t) const noexcept {
    const std::size_t m = arity();
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double pos = t * static_cast<double>(m);
    const auto i = std::min(static_cast<std::size_t>(pos), m - 1);
    const double frac = pos - static_cast<double>(i);
    return knots_[i] + frac * (knots_[i + 1] - knots_[i]);
}

double wowa(std::span<const double> x, const WowaMeasure& measure) {
    return evaluate_sorted(x, measure, FacetOrder::ascending);
}

double wowa_facet(std::span<const double> x, const WowaMeasure& measure, FacetOrder order) {
    if (!measure.is_unfairness()) {
        throw UsageError("wowa_facet: facet extremality requires nondecreasing weights");
    }
    return evaluate_sorted(x, measure, order);
}

}  // namespace kfn
