#include "grs/types.hpp"
#include "grs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace grs {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& msg)
{
    if (!ok) {
        throw DomainError(msg);
    }
}

} // namespace

Bandwidth::Bandwidth(std::vector<double> per_dim) : per_dim_(std::move(per_dim))
{
    require(!per_dim_.empty(), "Bandwidth: needs at least one dimension");
    for (double d : per_dim_) {
        require(d > 0.0 && d <= kPi, "Bandwidth: every delta_k must lie in (0, pi]");
    }
}

double Bandwidth::max_delta() const
{
    return *std::max_element(per_dim_.begin(), per_dim_.end());
}

RegularizationParams RegularizationParams::theorem1(int n, double delta)
{
    require(n >= 2, "theorem1 variance: n must be >= 2");
    require(delta > 0.0 && delta < kPi, "theorem1 variance: delta must lie in (0, pi)");
    const double r = std::sqrt((n - 1) / (kPi - delta));
    return {r, VarianceRule::Theorem1, (kPi - delta) / (2.0 * (n - 1))};
}

RegularizationParams RegularizationParams::theorem2(int n, double delta)
{
    require(n >= 3, "theorem2 variance: n must be >= 3");
    require(delta > 0.0 && delta < kPi, "theorem2 variance: delta must lie in (0, pi)");
    const double r = std::sqrt((n - 2) / (kPi - delta));
    return {r, VarianceRule::Theorem2, (kPi - delta) / (2.0 * (n - 2))};
}

RegularizationParams RegularizationParams::degenerate_pi(int n)
{
    require(n >= 2, "degenerate variance: n must be >= 2");
    const double r = std::pow(static_cast<double>(n), 9.0 / 8.0);
    return {r, VarianceRule::DegeneratePi, 1.0 / (2.0 * r * r)};
}

RegularizationParams RegularizationParams::average_sampling(int n)
{
    require(n >= 2, "average-sampling variance: n must be >= 2");
    const double r = std::pow(static_cast<double>(n), 5.0 / 6.0);
    // 2 r^2 written as 2 n^{5/3} directly
    return {r, VarianceRule::AverageSampling,
            1.0 / (2.0 * std::pow(static_cast<double>(n), 5.0 / 3.0))};
}

RegularizationParams RegularizationParams::manual(double r)
{
    require(r > 0.0, "manual variance: r must be positive");
    return {r, VarianceRule::Manual, 1.0 / (2.0 * r * r)};
}

} // namespace grs
