#include "grs/derivative.hpp"
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
constexpr int kMaxOrder = 20;

double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

} // namespace

DerivativeOrder::DerivativeOrder(int s) : s_(s)
{
    if (s_ < 1) {
        throw DomainError("DerivativeOrder: s must be >= 1");
    }
    if (s_ > kMaxOrder) {
        throw DomainError("DerivativeOrder: s > 20 unsupported");
    }
}

bool DerivativeOrder::admissible(int n, double delta) const
{
    if (!(delta > 0.0 && delta < kPi)) {
        return false;
    }
    const double needed = static_cast<double>(s_) * s_ / (2.0 * (kPi - delta));
    return n >= 3 && static_cast<double>(n) >= needed;
}

namespace {

// Entire-series evaluation sum_{2k >= m} c_k (2k)!/(2k-m)! x^{2k-m} with
// c_k = (-1)^k pi^{2k}/(2k+1)!. Cancellation-free for small |x|, where the
// finite closed sum loses digits between its 1/x^{l+1} terms.
double sinc_derivative_series(int m, double x)
{
    const double pi2 = kPi * kPi;
    double ck = 1.0;                       // c_k, starting at k = 0
    int k0 = (m + 1) / 2;
    for (int k = 0; k < k0; ++k) {
        ck *= -pi2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
    KahanSum sum;
    double x_pow = 1.0;                    // x^{2k-m}
    for (int i = 0; i < 2 * k0 - m; ++i) {
        x_pow *= x;
    }
    for (int k = k0; k <= k0 + 60; ++k) {
        double falling = 1.0;              // (2k)!/(2k-m)!
        for (int i = 0; i < m; ++i) {
            falling *= 2.0 * k - i;
        }
        const double term = ck * falling * x_pow;
        sum.add(term);
        if (std::abs(term) < 1e-25 * std::abs(sum.value()) + 1e-300) {
            break;
        }
        ck *= -pi2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        x_pow *= x * x;
    }
    return sum.value();
}

} // namespace

double sinc_derivative(int m, double x)
{
    if (m < 0 || m > kMaxOrder) {
        throw DomainError("sinc_derivative: order must lie in [0, 20]");
    }
    if (x == 0.0) {
        throw DomainError("sinc_derivative: x = 0 not in domain");
    }
    if (std::abs(x) < 0.5) {
        return sinc_derivative_series(m, x);
    }
    // m! * sum_l pi^{m-l-1} sin(pi(x+(m-l)/2)) / (m-l)! * (-1)^l / x^{l+1}
    KahanSum sum;
    double inv_x_pow = 1.0 / x;        // 1/x^{l+1}
    double sign = 1.0;                 // (-1)^l
    for (int l = 0; l <= m; ++l) {
        const int q = m - l;
        const double term = std::pow(kPi, q - 1) *
                            std::sin(kPi * (x + 0.5 * q)) / factorial(q) *
                            sign * inv_x_pow;
        sum.add(term);
        inv_x_pow /= x;
        sign = -sign;
    }
    return factorial(m) * sum.value();
}

double gaussian_derivative(int k, double x, double r)
{
    if (k < 0 || k > kMaxOrder) {
        throw DomainError("gaussian_derivative: order must lie in [0, 20]");
    }
    if (!(r > 0.0)) {
        throw DomainError("gaussian_derivative: r must be positive");
    }
    const double sr = std::numbers::sqrt2 * r;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * hermite(k, x / sr) / std::pow(sr, k) * gaussian_window(x, r);
}

double kernel_derivative(DerivativeOrder s, double x, double r)
{
    if (x == 0.0) {
        throw DomainError("kernel_derivative: x = 0 not in domain");
    }
    const int order = s.s();
    KahanSum sum;
    double binom = 1.0;                // C(order, k), multiplicative recurrence
    for (int k = 0; k <= order; ++k) {
        sum.add(binom * sinc_derivative(order - k, x) * gaussian_derivative(k, x, r));
        binom = binom * (order - k) / (k + 1);
    }
    return sum.value();
}

double reconstruct_derivative(const SampleWindow1D& window, DerivativeOrder s,
                              double t, const RegularizationParams& params)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw DomainError("reconstruct_derivative: t must lie strictly inside (0,1)");
    }
    KahanSum sum;
    detail::for_each_sample_by_distance(window.n(), t, [&](int j) {
        sum.add(window.value_at(j) * kernel_derivative(s, t - j, params.r));
    });
    return sum.value();
}

double bound_theorem2(DerivativeOrder s, int n, double delta)
{
    if (!(delta > 0.0 && delta < kPi)) {
        throw DomainError("bound_theorem2: delta must lie in (0, pi)");
    }
    if (!s.admissible(n, delta)) {
        throw DomainError("bound_theorem2: n=" + std::to_string(n) +
                          " below max{3, s^2/(2(pi-delta))} for s=" +
                          std::to_string(s.s()));
    }
    const int so = s.s();
    const double q = (kPi - delta) * (n - 2);
    const double lead = std::numbers::sqrt2 * std::pow(delta, so + 0.5) /
                            std::sqrt(2.0 * so + 1.0) +
                        24.0 * factorial(so + 2) / std::sqrt(static_cast<double>(n));
    return lead * std::exp(-0.5 * q) / (kPi * std::sqrt(q));
}

} // namespace grs
