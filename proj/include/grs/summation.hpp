#ifndef GRS_SUMMATION_HPP
#define GRS_SUMMATION_HPP

#include <cmath>

namespace grs {

/// Neumaier-compensated accumulator. Keeps table reproduction independent of
/// accumulation noise; the compensation also covers |term| > |sum|.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace grs

#endif
