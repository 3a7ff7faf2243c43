#include "grs/average.hpp"
#include "grs/detail/sample_order.hpp"
#include "grs/errors.hpp"
#include "grs/quadrature.hpp"
#include "grs/summation.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <unordered_map>

namespace grs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWeightSumTol = 1e-12;

} // namespace

AveragingMeasure::AveragingMeasure(double sigma, std::vector<Atom> atoms)
    : sigma_(sigma), atoms_(std::move(atoms))
{
    if (!(sigma_ > 0.0)) {
        throw DomainError("AveragingMeasure: sigma must be positive");
    }
    if (atoms_.empty()) {
        throw DomainError("AveragingMeasure: needs at least one atom");
    }
    KahanSum wsum;
    for (const Atom& a : atoms_) {
        if (!(a.w > 0.0)) {
            throw DomainError("AveragingMeasure: every weight must be positive");
        }
        if (std::abs(a.t) > sigma_ / 2.0) {
            throw DomainError("AveragingMeasure: atom offset outside [-sigma/2, sigma/2]");
        }
        wsum.add(a.w);
    }
    if (std::abs(wsum.value() - 1.0) > kWeightSumTol) {
        throw DomainError("AveragingMeasure: weights must sum to 1");
    }
    for (const Atom& a : atoms_) {
        bool mirrored = false;
        for (const Atom& b : atoms_) {
            if (b.t == -a.t && b.w == a.w) {
                mirrored = true;
                break;
            }
        }
        if (!mirrored) {
            throw DomainError("AveragingMeasure: not symmetric (atom at t=" +
                              std::to_string(a.t) + " lacks its mirror)");
        }
    }
}

AveragingMeasure AveragingMeasure::point_mass(double sigma)
{
    return {sigma, {Atom{0.0, 1.0}}};
}

AveragingMeasure load_measure_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("measure file not readable: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("measure file " + path + ": invalid JSON: " + e.what());
    }
    if (!j.contains("sigma") || !j["sigma"].is_number()) {
        throw ParseError("measure file " + path + ": missing numeric \"sigma\"");
    }
    if (!j.contains("atoms") || !j["atoms"].is_array()) {
        throw ParseError("measure file " + path + ": missing \"atoms\" array");
    }
    std::vector<Atom> atoms;
    for (const auto& a : j["atoms"]) {
        if (!a.contains("t") || !a.contains("w") || !a["t"].is_number() ||
            !a["w"].is_number()) {
            throw ParseError("measure file " + path +
                             ": every atom needs numeric \"t\" and \"w\"");
        }
        atoms.push_back({a["t"].get<double>(), a["w"].get<double>()});
    }
    return {j["sigma"].get<double>(), std::move(atoms)};
}

double average_sample(const std::function<double(double)>& signal, int j,
                      const AveragingMeasure& measure)
{
    KahanSum sum;
    for (const Atom& a : measure.atoms()) {
        sum.add(a.w * signal(j + a.t));
    }
    return sum.value();
}

double W_eval(double xi, const AveragingMeasure& measure, int order)
{
    KahanSum sum;
    switch (order) {
    case 0:
        for (const Atom& a : measure.atoms()) {
            sum.add(a.w * std::cos(a.t * xi));
        }
        break;
    case 1:
        for (const Atom& a : measure.atoms()) {
            sum.add(-a.w * a.t * std::sin(a.t * xi));
        }
        break;
    case 2:
        for (const Atom& a : measure.atoms()) {
            sum.add(-a.w * a.t * a.t * std::cos(a.t * xi));
        }
        break;
    default:
        throw DomainError("W_eval: order must be 0, 1, or 2");
    }
    return sum.value();
}

struct DualGenerator::PhiCache {
    std::mutex mu;
    std::unordered_map<long long, double> values;
};

DualGenerator::DualGenerator(AveragingMeasure measure, double delta, double quad_tol)
    : measure_(std::move(measure)),
      delta_(delta),
      quad_tol_(quad_tol),
      cache_(std::make_shared<PhiCache>())
{
    if (!(delta_ > 0.0 && delta_ < kPi)) {
        throw DomainError("DualGenerator: delta must lie in (0, pi)");
    }
    if (!(measure_.sigma() * delta_ < kPi)) {
        throw DomainError("DualGenerator: admissibility sigma*delta < pi violated");
    }
    if (!(quad_tol_ > 0.0)) {
        throw DomainError("DualGenerator: quad_tol must be positive");
    }
    gamma_ = std::cos(measure_.sigma() * delta_ / 2.0);
    // W'(delta) from the closed-form atom sum; P is sensitive to it.
    w_at_delta_ = W_eval(delta_, measure_, 0);
    wprime_at_delta_ = W_eval(delta_, measure_, 1);

    const double pd = kPi - delta_;
    const double w2 = w_at_delta_ * w_at_delta_;
    p_slope_ = 1.0 / (pd * w_at_delta_) - wprime_at_delta_ / w2;
    p_intercept_ = (kPi - 2.0 * delta_) / (pd * w_at_delta_) +
                   delta_ * wprime_at_delta_ / w2;
}

double DualGenerator::phi_hat(double xi) const
{
    const double a = std::abs(xi);
    if (a <= delta_) {
        return 1.0 / W_eval(a, measure_, 0);
    }
    const double edge = 2.0 * kPi - delta_;
    if (a <= edge) {
        const double q = (edge - a) / (2.0 * kPi - 2.0 * delta_);
        return q * q * (p_slope_ * a + p_intercept_);
    }
    return 0.0;
}

double DualGenerator::phi(double t) const
{
    const long long key = std::llround(t * 1e12);
    {
        std::scoped_lock lock(cache_->mu);
        auto it = cache_->values.find(key);
        if (it != cache_->values.end()) {
            return it->second;
        }
    }

    QuadratureOptions opt;
    opt.abs_tol = quad_tol_ / 2.0;
    const double edge = 2.0 * kPi - delta_;
    const double band = integrate(
        [&](double xi) { return std::cos(t * xi) / W_eval(xi, measure_, 0); }, 0.0,
        delta_, opt);
    const double transition = integrate(
        [&](double xi) {
            const double q = (edge - xi) / (2.0 * kPi - 2.0 * delta_);
            return q * q * (p_slope_ * xi + p_intercept_) * std::cos(t * xi);
        },
        delta_, edge, opt);
    const double value = std::sqrt(2.0 / kPi) * (band + transition);

    std::scoped_lock lock(cache_->mu);
    cache_->values.emplace(key, value);
    return value;
}

double phi_hat(double xi, const DualGenerator& dual)
{
    return dual.phi_hat(xi);
}

double phi_time(double t, const DualGenerator& dual)
{
    return dual.phi(t);
}

double reconstruct_avg(const SampleWindow1D& avg_samples, double t,
                       const DualGenerator& dual, int n)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw DomainError("reconstruct_avg: t must lie strictly inside (0,1)");
    }
    if (n != avg_samples.n()) {
        throw DomainError("reconstruct_avg: n does not match the sample window");
    }
    const double coeff = RegularizationParams::average_sampling(n).exponent_coeff;
    KahanSum sum;
    detail::for_each_sample_by_distance(n, t, [&](int j) {
        const double x = t - j;
        sum.add(avg_samples.value_at(j) * dual.phi(x) * std::exp(-x * x * coeff));
    });
    return sum.value() / std::sqrt(2.0 * kPi);
}

double bound_theorem4(int n, const DualGenerator& dual)
{
    if (n < 2) {
        throw DomainError("bound_theorem4: n must be >= 2");
    }
    const double d = dual.delta();
    const double s = dual.measure().sigma();
    const double g = dual.gamma();
    const double pd = kPi - d;
    const double rd = std::sqrt(d);

    const double c = (rd + 2.0 * d) * s * s / (g * g * g) +
                     (4.0 * s * rd / (pd * pd) + 16.0 * s / pd + kPi * s * rd) / (g * g) +
                     (8.0 * rd / (pd * pd) + 32.0 / pd + 10.0 * rd) / (pd * g);
    return c * std::pow(static_cast<double>(n), -5.0 / 3.0);
}

} // namespace grs
