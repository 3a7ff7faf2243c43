#include "grs/kernels.hpp"
#include "grs/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace grs {

double sinc(double x)
{
    const double px = std::numbers::pi * x;
    if (std::abs(x) < 1e-4) {
        const double p2 = px * px;
        return 1.0 + p2 * (-1.0 / 6.0 + p2 * (1.0 / 120.0 - p2 / 5040.0));
    }
    return std::sin(px) / px;
}

double gaussian_window(double x, double r)
{
    if (!(r > 0.0)) {
        throw DomainError("gaussian_window: r must be positive");
    }
    const double u = x / r;
    return std::exp(-0.5 * u * u);
}

double hermite(int k, double x)
{
    if (k < 0) {
        throw DomainError("hermite: order must be nonnegative");
    }
    double hm1 = 1.0;          // H_0
    if (k == 0) {
        return hm1;
    }
    double h = 2.0 * x;        // H_1
    for (int m = 1; m < k; ++m) {
        const double next = 2.0 * x * h - 2.0 * m * hm1;
        hm1 = h;
        h = next;
    }
    if (!std::isfinite(h)) {
        throw DomainError("hermite: overflow at k=" + std::to_string(k));
    }
    return h;
}

} // namespace grs
