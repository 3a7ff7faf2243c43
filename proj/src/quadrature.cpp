#include "grs/quadrature.hpp"
#include "grs/errors.hpp"
#include "grs/summation.hpp"

#include <cmath>
#include <string>

namespace grs {

namespace {

// 15-point Kronrod nodes/weights on [-1, 1] with the embedded 7-point Gauss
// rule (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double halflen = 0.5 * (b - a);

    const double fc = f(center);
    double result_gauss = fc * kWg[3];
    double result_kronrod = fc * kWgk[7];

    for (int i = 0; i < 7; ++i) {
        const double dx = halflen * kXgk[i];
        const double fsum = f(center - dx) + f(center + dx);
        result_kronrod += kWgk[i] * fsum;
        if (i % 2 == 1) {
            result_gauss += kWg[i / 2] * fsum;
        }
    }

    const double value = result_kronrod * halflen;
    const double err = std::abs((result_kronrod - result_gauss) * halflen);
    return {value, err};
}

struct Accumulation {
    KahanSum value;
    KahanSum error;
    bool level_capped = false;
};

void refine(const std::function<double(double)>& f, double a, double b, double tol,
            int level, const QuadratureOptions& opt, Accumulation& acc)
{
    const PanelResult panel = gk15(f, a, b);
    if (panel.error <= tol || level >= opt.max_levels) {
        if (panel.error > tol) {
            acc.level_capped = true;
        }
        acc.value.add(panel.value);
        acc.error.add(panel.error);
        return;
    }
    const double mid = 0.5 * (a + b);
    refine(f, a, mid, 0.5 * tol, level + 1, opt, acc);
    refine(f, mid, b, 0.5 * tol, level + 1, opt, acc);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt, double* err_estimate)
{
    if (!(a <= b)) {
        throw DomainError("integrate: requires a <= b");
    }
    Accumulation acc;
    refine(f, a, b, opt.abs_tol, 0, opt, acc);
    const double total_err = acc.error.value();
    if (err_estimate != nullptr) {
        *err_estimate = total_err;
    }
    if (acc.level_capped && total_err > opt.abs_tol) {
        throw QuadratureError(
            "integrate: tolerance " + std::to_string(opt.abs_tol) +
                " not reached after " + std::to_string(opt.max_levels) +
                " levels (error estimate " + std::to_string(total_err) + ")",
            total_err);
    }
    return acc.value.value();
}

} // namespace grs
