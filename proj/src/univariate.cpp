#include "grs/univariate.hpp"
#include "grs/detail/sample_order.hpp"
#include "grs/errors.hpp"
#include "grs/kernels.hpp"
#include "grs/summation.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace grs {

namespace {

constexpr double kPi = std::numbers::pi;

void check_t_open_unit(double t)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw DomainError("reconstruction point t must lie strictly inside (0,1), got " +
                          std::to_string(t));
    }
}

} // namespace

SampleWindow1D::SampleWindow1D(int n, std::vector<double> values)
    : n_(n), values_(std::move(values))
{
    if (n_ < 2) {
        throw DomainError("SampleWindow1D: n must be >= 2");
    }
    if (values_.size() != static_cast<std::size_t>(2 * n_)) {
        throw DomainError("SampleWindow1D: expected " + std::to_string(2 * n_) +
                          " samples for indices (-n, n], got " +
                          std::to_string(values_.size()));
    }
}

SampleWindow1D SampleWindow1D::from_signal(const std::function<double(double)>& f, int n)
{
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(2 * n));
    for (int j = -n + 1; j <= n; ++j) {
        v.push_back(f(static_cast<double>(j)));
    }
    return {n, std::move(v)};
}

double SampleWindow1D::value_at(int j) const
{
    if (j <= -n_ || j > n_) {
        throw DomainError("SampleWindow1D: index " + std::to_string(j) +
                          " outside (-n, n] with n=" + std::to_string(n_));
    }
    return values_[static_cast<std::size_t>(j + n_ - 1)];
}

RegularizationParams optimal_variance(int n, double delta)
{
    return RegularizationParams::theorem1(n, delta);
}

double reconstruct_gauss(const SampleWindow1D& window, double t,
                         const RegularizationParams& params)
{
    check_t_open_unit(t);
    const double coeff = params.exponent_coeff;
    KahanSum sum;
    detail::for_each_sample_by_distance(window.n(), t, [&](int j) {
        const double x = t - j;
        sum.add(window.value_at(j) * sinc(x) * std::exp(-x * x * coeff));
    });
    return sum.value();
}

double reconstruct_truncated(const SampleWindow1D& window, double t)
{
    check_t_open_unit(t);
    KahanSum sum;
    detail::for_each_sample_by_distance(window.n(), t, [&](int j) {
        sum.add(window.value_at(j) * sinc(t - j));
    });
    return sum.value();
}

double bound_theorem1(int n, double delta)
{
    if (n < 2) {
        throw DomainError("bound_theorem1: n must be >= 2");
    }
    if (!(delta > 0.0 && delta < kPi)) {
        throw DomainError("bound_theorem1: delta must lie in (0, pi); "
                          "use degenerate_pi_bound at delta = pi");
    }
    const double q = (kPi - delta) * (n - 1);
    return (std::sqrt(2.0 * delta) + 1.0 / std::sqrt(static_cast<double>(n))) *
           std::exp(-0.5 * q) / (kPi * std::sqrt(q));
}

DegeneratePiRate degenerate_pi_bound(int n)
{
    if (n < 2) {
        throw DomainError("degenerate_pi_bound: n must be >= 2");
    }
    const double nn = static_cast<double>(n);
    return {std::pow(nn, 9.0 / 8.0), 3.0 * std::pow(nn, -3.0 / 8.0)};
}

} // namespace grs
