#ifndef GRS_QUADRATURE_HPP
#define GRS_QUADRATURE_HPP

#include <functional>

namespace grs {

struct QuadratureOptions {
    double abs_tol = 1e-14;
    int max_levels = 20;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] with an
/// absolute-tolerance termination criterion. The achieved error estimate is
/// written to *err_estimate when given. Throws QuadratureError when the
/// estimate still exceeds abs_tol after max_levels bisections.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {}, double* err_estimate = nullptr);

} // namespace grs

#endif
