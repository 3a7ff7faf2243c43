#ifndef GRS_UNIVARIATE_HPP
#define GRS_UNIVARIATE_HPP

#include "grs/types.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace grs {

/// Samples f(j) for the integer indices j in (-n, n], n >= 2.
class SampleWindow1D {
public:
    SampleWindow1D(int n, std::vector<double> values);

    /// Samples the signal at j = -n+1, ..., n.
    static SampleWindow1D from_signal(const std::function<double(double)>& f, int n);

    int n() const { return n_; }
    double value_at(int j) const;                 // j in (-n, n]
    const std::vector<double>& values() const { return values_; }

private:
    int n_;
    std::vector<double> values_;   // index j stored at j + n - 1
};

enum class ReconMethod { GaussRegularized, Truncated };

/// Pointwise reconstruction errors on a grid, their maximum, and the
/// matching theoretical bound.
struct ErrorReport {
    std::vector<std::pair<double, double>> grid;   // (t, |error|)
    double max_error = 0.0;
    double bound = 0.0;
    ReconMethod method = ReconMethod::GaussRegularized;
};

/// r = sqrt((n-1)/(pi-delta)), the variance choice behind bound_theorem1.
RegularizationParams optimal_variance(int n, double delta);

/// Gaussian-regularized Shannon sum over the window at t in (0,1).
double reconstruct_gauss(const SampleWindow1D& window, double t,
                         const RegularizationParams& params);

/// Plain truncated Shannon sum at t in (0,1).
double reconstruct_truncated(const SampleWindow1D& window, double t);

/// (sqrt(2 delta) + 1/sqrt(n)) e^{-(pi-delta)(n-1)/2} / (pi sqrt((pi-delta)(n-1)))
double bound_theorem1(int n, double delta);

/// Degenerate full-band rate: r = n^{9/8}, bound = 3 n^{-3/8}.
struct DegeneratePiRate {
    double r;
    double bound;
};
DegeneratePiRate degenerate_pi_bound(int n);

} // namespace grs

#endif
