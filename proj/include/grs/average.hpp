#ifndef GRS_AVERAGE_HPP
#define GRS_AVERAGE_HPP

#include "grs/univariate.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace grs {

struct Atom {
    double t;   // offset in [-sigma/2, sigma/2]
    double w;   // positive weight
};

/// Symmetric atomic probability measure on [-sigma/2, sigma/2].
class AveragingMeasure {
public:
    AveragingMeasure(double sigma, std::vector<Atom> atoms);

    /// Delta measure at the origin; recovers pointwise sampling.
    static AveragingMeasure point_mass(double sigma = 1.0);

    double sigma() const { return sigma_; }
    std::span<const Atom> atoms() const { return atoms_; }

private:
    double sigma_;
    std::vector<Atom> atoms_;
};

/// Loads `{"sigma": s, "atoms": [{"t": ..., "w": ...}, ...]}`, enforcing every
/// measure invariant; the error message names the violated invariant.
AveragingMeasure load_measure_json(const std::string& path);

/// f~(j) = sum_k w_k f(j + t_k).
double average_sample(const std::function<double(double)>& signal, int j,
                      const AveragingMeasure& measure);

/// Fourier transform of the measure and its first two derivatives:
///   order 0:  sum w_k cos(t_k xi)
///   order 1: -sum w_k t_k sin(t_k xi)
///   order 2: -sum w_k t_k^2 cos(t_k xi)
double W_eval(double xi, const AveragingMeasure& measure, int order = 0);

/// The dual generator pair (W, phi_hat) for a measure and band limit delta,
/// with a quadrature-backed, memoized time-domain evaluator phi.
/// Immutable after construction; phi's cache is mutex-guarded.
class DualGenerator {
public:
    DualGenerator(AveragingMeasure measure, double delta, double quad_tol = 1e-10);

    const AveragingMeasure& measure() const { return measure_; }
    double delta() const { return delta_; }
    double gamma() const { return gamma_; }         // cos(sigma delta / 2)
    double quad_tol() const { return quad_tol_; }

    /// Spectral dual: 1/W on [-delta, delta], the quadratic-times-affine
    /// piece on delta <= |xi| <= 2pi - delta, zero elsewhere. Even in xi.
    double phi_hat(double xi) const;

    /// Time-domain dual via the two cosine integrals, to quad_tol.
    double phi(double t) const;

private:
    AveragingMeasure measure_;
    double delta_;
    double quad_tol_;
    double gamma_;
    double w_at_delta_;
    double wprime_at_delta_;
    double p_slope_;       // P(xi) = p_slope_ |xi| + p_intercept_
    double p_intercept_;

    struct PhiCache;
    std::shared_ptr<PhiCache> cache_;
};

double phi_hat(double xi, const DualGenerator& dual);
double phi_time(double t, const DualGenerator& dual);

/// (1/sqrt(2pi)) sum_{j in (-n, n]} f~(j) phi(t-j) exp(-(t-j)^2/(2 n^{5/3})),
/// the Gaussian-regularized average-sampling reconstruction with r = n^{5/6}.
double reconstruct_avg(const SampleWindow1D& avg_samples, double t,
                       const DualGenerator& dual, int n);

/// c n^{-5/3} with the explicit three-term constant c(delta, sigma, gamma).
double bound_theorem4(int n, const DualGenerator& dual);

} // namespace grs

#endif
