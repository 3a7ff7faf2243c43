#ifndef GRS_ORACLES_HPP
#define GRS_ORACLES_HPP

namespace grs {

/// A (lhs, rhs) pair for a strict inequality lhs < rhs; consumed by the
/// property suites as a numeric reference.
struct BoundPair {
    double lhs;
    double rhs;
};

/// Gaussian tail against the Mills-ratio bound:
///   lhs = integral_x^inf e^{-t^2} dt,  rhs = e^{-x^2} / (2x),  x > 0.
/// The tail is integrated as e^{-x^2} * integral_0^inf e^{-2xu-u^2} du so the
/// quadrature tolerance applies to an O(1) integrand at every x.
BoundPair mills_tail_oracle(double x);

/// Lattice Gaussian tail against its closed-form bound:
///   lhs = sum_{j not in (-n, n]} e^{-(t-j)^2 / r^2},
///   rhs = r^2/(n-1) * e^{-(n-1)^2 / r^2},   n >= 2, r > 0, t in (0,1).
/// The two-sided sum truncates when terms drop below 1e-300.
BoundPair discrete_gaussian_tail_oracle(int n, double r, double t);

} // namespace grs

#endif
