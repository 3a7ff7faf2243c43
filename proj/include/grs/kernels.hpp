#ifndef GRS_KERNELS_HPP
#define GRS_KERNELS_HPP

namespace grs {

/// sin(pi x)/(pi x) with the removable singularity at x = 0 resolved by a
/// degree-6 Taylor expansion for |x| < 1e-4.
double sinc(double x);

/// exp(-x^2 / (2 r^2)), r > 0.
double gaussian_window(double x, double r);

/// Physicists' Hermite polynomial H_k(x), evaluated by the three-term
/// recurrence H_{k+1} = 2x H_k - 2k H_{k-1}. Throws DomainError for k < 0
/// and signals overflow (non-finite result) via DomainError.
double hermite(int k, double x);

} // namespace grs

#endif
