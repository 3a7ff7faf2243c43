#ifndef GRS_SIGNAL_HPP
#define GRS_SIGNAL_HPP

#include <span>

namespace grs {

enum class SignalKind { Univariate, BivariateProduct };

/// The unit-norm bandlimited benchmark signal
///   f_delta(t) = (2 sin(delta t)/t + sin(delta (t-1))/(t-1))
///                  / sqrt(pi (5 delta + 4 sin delta))
/// and its bivariate product f_{delta1}(t1) f_{delta2}(t2).
class TestSignal {
public:
    explicit TestSignal(double delta);
    TestSignal(double delta1, double delta2);   // requires delta1 <= delta2

    SignalKind kind() const { return kind_; }
    int dim() const { return kind_ == SignalKind::Univariate ? 1 : 2; }
    double delta(int k = 0) const;

    double operator()(double t) const;                 // univariate only
    double operator()(double t1, double t2) const;     // bivariate only
    double eval(std::span<const double> t) const;

    /// First derivative of the univariate signal.
    double derivative(double t) const;

private:
    SignalKind kind_;
    double delta_[2];
};

} // namespace grs

#endif
