#include "grs/multivariate.hpp"
#include "grs/errors.hpp"
#include "grs/kernels.hpp"
#include "grs/summation.hpp"
#include "grs/univariate.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace grs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxDim = 3;
constexpr int kMaxN = 64;

std::size_t lattice_size(int d, int n)
{
    std::size_t s = 1;
    for (int k = 0; k < d; ++k) {
        s *= static_cast<std::size_t>(2 * n);
    }
    return s;
}

void check_point(const SampleWindowND& w, std::span<const double> t)
{
    if (static_cast<int>(t.size()) != w.dim()) {
        throw DomainError("reconstruction point has dimension " +
                          std::to_string(t.size()) + ", window has " +
                          std::to_string(w.dim()));
    }
    for (double tk : t) {
        if (!(tk > 0.0 && tk < 1.0)) {
            throw DomainError("every coordinate must lie strictly inside (0,1)");
        }
    }
}

// Per-axis kernel pieces sampled over j = -n+1..n.
struct AxisTables {
    std::vector<double> sinc_vals;
    std::vector<double> sq_dist;
};

AxisTables axis_tables(double tk, int n)
{
    AxisTables a;
    a.sinc_vals.reserve(static_cast<std::size_t>(2 * n));
    a.sq_dist.reserve(static_cast<std::size_t>(2 * n));
    for (int j = -n + 1; j <= n; ++j) {
        const double x = tk - j;
        a.sinc_vals.push_back(sinc(x));
        a.sq_dist.push_back(x * x);
    }
    return a;
}

SampleWindow1D as_univariate(const SampleWindowND& w)
{
    return {w.n(), w.values()};
}

} // namespace

SampleWindowND::SampleWindowND(int d, int n, std::vector<double> values)
    : d_(d), n_(n), values_(std::move(values))
{
    if (d_ < 1 || d_ > kMaxDim) {
        throw DomainError("SampleWindowND: dimension must lie in [1, 3]");
    }
    if (n_ < 2 || n_ > kMaxN) {
        throw DomainError("SampleWindowND: n must lie in [2, 64]");
    }
    const std::size_t expect = lattice_size(d_, n_);
    if (values_.size() != expect) {
        throw DomainError("SampleWindowND: expected " + std::to_string(expect) +
                          " lattice samples, got " + std::to_string(values_.size()));
    }
}

SampleWindowND SampleWindowND::from_signal(
    const std::function<double(std::span<const double>)>& f, int d, int n)
{
    if (d < 1 || d > kMaxDim) {
        throw DomainError("SampleWindowND: dimension must lie in [1, 3]");
    }
    if (n < 2 || n > kMaxN) {
        throw DomainError("SampleWindowND: n must lie in [2, 64]");
    }
    std::vector<double> v(lattice_size(d, n));
    std::array<int, kMaxDim> idx{};
    std::array<double, kMaxDim> point{};
    const int side = 2 * n;
    for (std::size_t flat = 0; flat < v.size(); ++flat) {
        std::size_t rest = flat;
        for (int k = d - 1; k >= 0; --k) {
            idx[static_cast<std::size_t>(k)] = static_cast<int>(rest % side) - n + 1;
            rest /= side;
        }
        for (int k = 0; k < d; ++k) {
            point[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k)];
        }
        v[flat] = f(std::span<const double>(point.data(), static_cast<std::size_t>(d)));
    }
    return {d, n, std::move(v)};
}

double SampleWindowND::value_at(std::span<const int> j) const
{
    if (static_cast<int>(j.size()) != d_) {
        throw DomainError("value_at: index dimension mismatch");
    }
    std::size_t flat = 0;
    for (int k = 0; k < d_; ++k) {
        const int jk = j[static_cast<std::size_t>(k)];
        if (jk <= -n_ || jk > n_) {
            throw DomainError("value_at: index outside (-n, n]");
        }
        flat = flat * static_cast<std::size_t>(2 * n_) +
               static_cast<std::size_t>(jk + n_ - 1);
    }
    return values_[flat];
}

double sinc_multi(std::span<const double> x)
{
    if (x.empty()) {
        throw DomainError("sinc_multi: dimension must be >= 1");
    }
    double p = 1.0;
    for (double xk : x) {
        p *= sinc(xk);
    }
    return p;
}

double reconstruct_gauss_multi(const SampleWindowND& window, std::span<const double> t,
                               const RegularizationParams& params)
{
    check_point(window, t);
    if (window.dim() == 1) {
        return reconstruct_gauss(as_univariate(window), t[0], params);
    }

    const int n = window.n();
    const int side = 2 * n;
    const double coeff = params.exponent_coeff;
    const std::vector<double>& v = window.values();

    std::vector<AxisTables> ax;
    ax.reserve(static_cast<std::size_t>(window.dim()));
    for (int k = 0; k < window.dim(); ++k) {
        ax.push_back(axis_tables(t[static_cast<std::size_t>(k)], n));
    }

    KahanSum sum;
    if (window.dim() == 2) {
        std::size_t flat = 0;
        for (int i1 = 0; i1 < side; ++i1) {
            const double s1 = ax[0].sinc_vals[static_cast<std::size_t>(i1)];
            const double q1 = ax[0].sq_dist[static_cast<std::size_t>(i1)];
            for (int i2 = 0; i2 < side; ++i2, ++flat) {
                const double s2 = ax[1].sinc_vals[static_cast<std::size_t>(i2)];
                const double q2 = ax[1].sq_dist[static_cast<std::size_t>(i2)];
                sum.add(v[flat] * s1 * s2 * std::exp(-(q1 + q2) * coeff));
            }
        }
    } else {
        std::size_t flat = 0;
        for (int i1 = 0; i1 < side; ++i1) {
            for (int i2 = 0; i2 < side; ++i2) {
                const double s12 = ax[0].sinc_vals[static_cast<std::size_t>(i1)] *
                                   ax[1].sinc_vals[static_cast<std::size_t>(i2)];
                const double q12 = ax[0].sq_dist[static_cast<std::size_t>(i1)] +
                                   ax[1].sq_dist[static_cast<std::size_t>(i2)];
                for (int i3 = 0; i3 < side; ++i3, ++flat) {
                    sum.add(v[flat] * s12 * ax[2].sinc_vals[static_cast<std::size_t>(i3)] *
                            std::exp(-(q12 + ax[2].sq_dist[static_cast<std::size_t>(i3)]) * coeff));
                }
            }
        }
    }
    return sum.value();
}

double reconstruct_truncated_multi(const SampleWindowND& window,
                                   std::span<const double> t)
{
    check_point(window, t);
    if (window.dim() == 1) {
        return reconstruct_truncated(as_univariate(window), t[0]);
    }

    const int n = window.n();
    const int side = 2 * n;
    const std::vector<double>& v = window.values();

    std::vector<AxisTables> ax;
    ax.reserve(static_cast<std::size_t>(window.dim()));
    for (int k = 0; k < window.dim(); ++k) {
        ax.push_back(axis_tables(t[static_cast<std::size_t>(k)], n));
    }

    KahanSum sum;
    if (window.dim() == 2) {
        std::size_t flat = 0;
        for (int i1 = 0; i1 < side; ++i1) {
            const double s1 = ax[0].sinc_vals[static_cast<std::size_t>(i1)];
            for (int i2 = 0; i2 < side; ++i2, ++flat) {
                sum.add(v[flat] * s1 * ax[1].sinc_vals[static_cast<std::size_t>(i2)]);
            }
        }
    } else {
        std::size_t flat = 0;
        for (int i1 = 0; i1 < side; ++i1) {
            for (int i2 = 0; i2 < side; ++i2) {
                const double s12 = ax[0].sinc_vals[static_cast<std::size_t>(i1)] *
                                   ax[1].sinc_vals[static_cast<std::size_t>(i2)];
                for (int i3 = 0; i3 < side; ++i3, ++flat) {
                    sum.add(v[flat] * s12 * ax[2].sinc_vals[static_cast<std::size_t>(i3)]);
                }
            }
        }
    }
    return sum.value();
}

double bound_theorem3(int n, const Bandwidth& bandwidth)
{
    if (n < 2) {
        throw DomainError("bound_theorem3: n must be >= 2");
    }
    const double big_delta = bandwidth.max_delta();
    if (!(big_delta < kPi)) {
        throw DomainError("bound_theorem3: every delta_k must lie strictly below pi");
    }
    const int d = bandwidth.dim();
    const double q = (kPi - big_delta) * (n - 1);
    const double lead = d * std::pow(2.0 * big_delta, 0.5 * d) +
                        std::sqrt(static_cast<double>(d) / n);
    return lead * std::exp(-0.5 * q) / (kPi * std::sqrt(q));
}

} // namespace grs
