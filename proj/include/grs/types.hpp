#ifndef GRS_TYPES_HPP
#define GRS_TYPES_HPP

#include <cstddef>
#include <vector>

namespace grs {

/// Per-dimension band limits, each in (0, pi].
class Bandwidth {
public:
    explicit Bandwidth(std::vector<double> per_dim);

    int dim() const { return static_cast<int>(per_dim_.size()); }
    double operator[](int k) const { return per_dim_[static_cast<std::size_t>(k)]; }
    const std::vector<double>& per_dim() const { return per_dim_; }

    /// Delta = max_k delta_k, recomputed on demand.
    double max_delta() const;

private:
    std::vector<double> per_dim_;
};

/// Which selection rule produced the Gaussian variance parameter r.
enum class VarianceRule { Theorem1, Theorem2, DegeneratePi, AverageSampling, Manual };

/// Gaussian variance parameter r plus the coefficient c of the window
/// exp(-x^2 c). For the theorem rules c is formed directly from (n, delta)
/// in the exponent-combined form, not by squaring r back.
struct RegularizationParams {
    double r;
    VarianceRule rule;
    double exponent_coeff;   // window is exp(-x^2 * exponent_coeff)

    static RegularizationParams theorem1(int n, double delta);
    static RegularizationParams theorem2(int n, double delta);
    static RegularizationParams degenerate_pi(int n);
    static RegularizationParams average_sampling(int n);
    static RegularizationParams manual(double r);
};

} // namespace grs

#endif
