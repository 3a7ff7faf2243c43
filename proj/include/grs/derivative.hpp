#ifndef GRS_DERIVATIVE_HPP
#define GRS_DERIVATIVE_HPP

#include "grs/types.hpp"
#include "grs/univariate.hpp"

namespace grs {

/// Order s >= 1 of the derivative being reconstructed. Orders above 20 are
/// rejected (factorials and binomials stay exact in double up to there).
class DerivativeOrder {
public:
    explicit DerivativeOrder(int s);
    int s() const { return s_; }

    /// Theorem-2 admissibility: n >= max{3, s^2 / (2(pi - delta))}.
    bool admissible(int n, double delta) const;

private:
    int s_;
};

/// m-th derivative of sinc at x != 0, by the closed finite sum
///   m! sum_{l=0}^m pi^{m-l-1} sin(pi(x + (m-l)/2)) / (m-l)! * (-1)^l / x^{l+1}.
double sinc_derivative(int m, double x);

/// k-th derivative of exp(-x^2/(2 r^2)):
///   (-1)^k H_k(x / (sqrt2 r)) / (sqrt2 r)^k * exp(-x^2/(2 r^2)).
double gaussian_derivative(int k, double x, double r);

/// Leibniz expansion of d^s/dx^s [sinc(x) exp(-x^2/(2 r^2))], x != 0.
double kernel_derivative(DerivativeOrder s, double x, double r);

/// Term-by-term s-th derivative of the Gaussian-regularized Shannon sum.
double reconstruct_derivative(const SampleWindow1D& window, DerivativeOrder s,
                              double t, const RegularizationParams& params);

/// (sqrt2 delta^{s+1/2}/sqrt(2s+1) + 24 (s+2)!/sqrt(n))
///   * e^{-(pi-delta)(n-2)/2} / (pi sqrt((pi-delta)(n-2)))
double bound_theorem2(DerivativeOrder s, int n, double delta);

} // namespace grs

#endif
