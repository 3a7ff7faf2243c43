#include "grs/signal.hpp"
#include "grs/errors.hpp"

#include <cmath>
#include <numbers>

namespace grs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesRadius = 1e-4;

double norm_factor(double delta)
{
    return 1.0 / std::sqrt(kPi * (5.0 * delta + 4.0 * std::sin(delta)));
}

// sin(d u)/u, singularity at u = 0 resolved by series.
double sin_over(double d, double u)
{
    if (std::abs(u) < kSeriesRadius) {
        const double q = d * u;
        const double q2 = q * q;
        return d * (1.0 + q2 * (-1.0 / 6.0 + q2 * (1.0 / 120.0 - q2 / 5040.0)));
    }
    return std::sin(d * u) / u;
}

// d/du [sin(d u)/u] = (d u cos(d u) - sin(d u)) / u^2. The numerator cancels
// catastrophically for small |d u|, so the series
//   sum_{k>=1} (-1)^k (2k/(2k+1)!) (d u)^{2k+1}
// is used out to |d u| <= 1 (about ten terms reach full precision there).
double dsin_over(double d, double u)
{
    const double z = d * u;
    if (std::abs(z) <= 1.0) {
        double term = -z * z * z / 3.0;    // k = 1
        double acc = term;
        for (int k = 1; k <= 16; ++k) {
            term *= -z * z * (k + 1.0) / (k * (2.0 * k + 2.0) * (2.0 * k + 3.0));
            acc += term;
            if (std::abs(term) < 1e-25 * std::abs(acc)) {
                break;
            }
        }
        return (u == 0.0) ? 0.0 : acc / (u * u);
    }
    return (z * std::cos(z) - std::sin(z)) / (u * u);
}

} // namespace

TestSignal::TestSignal(double delta) : kind_(SignalKind::Univariate), delta_{delta, 0.0}
{
    if (!(delta > 0.0 && delta < kPi)) {
        throw DomainError("TestSignal: delta must lie in (0, pi)");
    }
}

TestSignal::TestSignal(double delta1, double delta2)
    : kind_(SignalKind::BivariateProduct), delta_{delta1, delta2}
{
    if (!(delta1 > 0.0 && delta2 < kPi && delta1 <= delta2)) {
        throw DomainError("TestSignal: need 0 < delta1 <= delta2 < pi");
    }
}

double TestSignal::delta(int k) const
{
    if (k < 0 || k >= dim()) {
        throw DomainError("TestSignal: delta index out of range");
    }
    return delta_[k];
}

double TestSignal::operator()(double t) const
{
    if (kind_ != SignalKind::Univariate) {
        throw DomainError("TestSignal: univariate evaluation of a bivariate signal");
    }
    const double d = delta_[0];
    return norm_factor(d) * (2.0 * sin_over(d, t) + sin_over(d, t - 1.0));
}

double TestSignal::operator()(double t1, double t2) const
{
    if (kind_ != SignalKind::BivariateProduct) {
        throw DomainError("TestSignal: bivariate evaluation of a univariate signal");
    }
    return TestSignal(delta_[0])(t1) * TestSignal(delta_[1])(t2);
}

double TestSignal::eval(std::span<const double> t) const
{
    if (static_cast<int>(t.size()) != dim()) {
        throw DomainError("TestSignal: evaluation point has wrong dimension");
    }
    return dim() == 1 ? (*this)(t[0]) : (*this)(t[0], t[1]);
}

double TestSignal::derivative(double t) const
{
    if (kind_ != SignalKind::Univariate) {
        throw DomainError("TestSignal: derivative defined for univariate signals only");
    }
    const double d = delta_[0];
    return norm_factor(d) * (2.0 * dsin_over(d, t) + dsin_over(d, t - 1.0));
}

} // namespace grs
