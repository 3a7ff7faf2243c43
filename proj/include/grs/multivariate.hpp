#ifndef GRS_MULTIVARIATE_HPP
#define GRS_MULTIVARIATE_HPP

#include "grs/types.hpp"

#include <functional>
#include <span>
#include <vector>

namespace grs {

/// Samples on the integer lattice J_n = (-n, n]^d, stored row-major in the
/// declared dimension order. Supported sizes: d <= 3, n <= 64.
class SampleWindowND {
public:
    SampleWindowND(int d, int n, std::vector<double> values);

    static SampleWindowND from_signal(
        const std::function<double(std::span<const double>)>& f, int d, int n);

    int dim() const { return d_; }
    int n() const { return n_; }
    double value_at(std::span<const int> j) const;
    const std::vector<double>& values() const { return values_; }

private:
    int d_;
    int n_;
    std::vector<double> values_;
};

/// Product of univariate sincs.
double sinc_multi(std::span<const double> x);

/// Lattice sum of f(j) sinc(t-j) exp(-||t-j||^2 c) over J_n, t in (0,1)^d.
/// At d = 1 this takes exactly the univariate code path (same summation
/// order), so the results are bit-identical with reconstruct_gauss.
double reconstruct_gauss_multi(const SampleWindowND& window, std::span<const double> t,
                               const RegularizationParams& params);

/// Same lattice sum without the Gaussian factor.
double reconstruct_truncated_multi(const SampleWindowND& window,
                                   std::span<const double> t);

/// (d (2 Delta)^{d/2} + sqrt(d/n)) e^{-(pi-Delta)(n-1)/2}
///   / (pi sqrt((pi-Delta)(n-1))), Delta = max_k delta_k.
double bound_theorem3(int n, const Bandwidth& bandwidth);

} // namespace grs

#endif
