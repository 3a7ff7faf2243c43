#include "grs/oracles.hpp"
#include "grs/errors.hpp"
#include "grs/quadrature.hpp"
#include "grs/summation.hpp"

#include <cmath>

namespace grs {

namespace {

constexpr double kTermCutoff = 1e-300;   // below meaningful double range

} // namespace

BoundPair mills_tail_oracle(double x)
{
    if (!(x > 0.0)) {
        throw DomainError("mills_tail_oracle: x must be positive");
    }
    // integral_x^inf e^{-t^2} dt = e^{-x^2} * integral_0^inf e^{-2xu-u^2} du;
    // the substituted integrand is below 1e-18 past u = 42.
    const double upper = 42.0;
    const double scaled = integrate(
        [x](double u) { return std::exp(-u * (2.0 * x + u)); }, 0.0, upper);
    const double lhs = std::exp(-x * x) * scaled;
    const double rhs = std::exp(-x * x) / (2.0 * x);
    return {lhs, rhs};
}

BoundPair discrete_gaussian_tail_oracle(int n, double r, double t)
{
    if (n < 2) {
        throw DomainError("discrete_gaussian_tail_oracle: n must be >= 2");
    }
    if (!(r > 0.0)) {
        throw DomainError("discrete_gaussian_tail_oracle: r must be positive");
    }
    if (!(t > 0.0 && t < 1.0)) {
        throw DomainError("discrete_gaussian_tail_oracle: t must lie in (0,1)");
    }

    KahanSum sum;
    auto term = [&](double j) {
        const double u = (t - j) / r;
        return std::exp(-u * u);
    };
    for (int j = n + 1;; ++j) {
        const double v = term(j);
        if (v < kTermCutoff) {
            break;
        }
        sum.add(v);
    }
    for (int j = -n;; --j) {
        const double v = term(j);
        if (v < kTermCutoff) {
            break;
        }
        sum.add(v);
    }

    const double m = n - 1;
    const double rhs = r * r / m * std::exp(-m * m / (r * r));
    return {sum.value(), rhs};
}

} // namespace grs
