#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "levypide/errors.hpp"

namespace levypide {

inline double norm_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

namespace detail {

// Recursive adaptive Simpson for complex-valued integrands.
template <class F>
std::complex<double> simpson_rec(const F& f, double a, double b,
                                 std::complex<double> fa, std::complex<double> fm,
                                 std::complex<double> fb, std::complex<double> whole,
                                 double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const std::complex<double> flm = f(lm), frm = f(rm);
    const std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const std::complex<double> err = left + right - whole;
    if (depth <= 0 || std::abs(err) < 15.0 * tol)
        return left + right + err / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
std::complex<double> adaptive_simpson(const F& f, double a, double b, double rel_tol) {
    const std::complex<double> fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    const std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double scale = std::max(std::abs(whole), 1e-300);
    return simpson_rec(f, a, b, fa, fm, fb, whole, rel_tol * scale, 48);
}

}  // namespace detail

// log K_nu(z) for real order and complex argument with Re z > 0, through the
// integral representation K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt.
// The integrand is rescaled by e^z so the result stays representable for
// large |z|.
inline std::complex<double> log_bessel_k(double nu, std::complex<double> z,
                                         double rel_tol = 1e-13) {
    if (!(z.real() > 0.0))
        throw DomainError("log_bessel_k: argument must have positive real part");
    const double anu = std::abs(nu);
    // Truncation point: residual factor below e^-46 relative to the peak.
    double t_max = 1.0;
    for (int pass = 0; pass < 3; ++pass)
        t_max = std::acosh(1.0 + (110.0 + anu * t_max) / z.real());
    const auto integrand = [&](double t) {
        return std::exp(-z * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
    };
    const std::complex<double> scaled = detail::adaptive_simpson(integrand, 0.0, t_max, rel_tol);
    return -z + std::log(scaled);
}

inline double bessel_k(double nu, double x) {
    return std::exp(log_bessel_k(nu, std::complex<double>(x, 0.0)).real());
}

// Lambert W on the lower real branch W_{-1}: solves w e^w = x for
// x in [-1/e, 0), w <= -1.
inline double lambert_w_minus1(double x) {
    const double min_x = -std::exp(-1.0);
    if (x < min_x - 1e-15 || x >= 0.0)
        throw DomainError("lambert_w_minus1: argument outside [-1/e, 0)");
    if (x < min_x) x = min_x;
    const double L1 = std::log(-x);
    double w = (x > -0.05) ? L1 - std::log(-L1) : -1.0 - std::sqrt(2.0 * (1.0 + std::exp(1.0) * x));
    for (int it = 0; it < 80; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        if (std::abs(f) <= 1e-16 * std::abs(x) + 1e-300) break;
        const double fp = ew * (w + 1.0);
        const double fpp = ew * (w + 2.0);
        const double dw = f / (fp - 0.5 * f * fpp / fp);  // Halley
        w -= dw;
        if (std::abs(dw) < 1e-16 * std::abs(w)) break;
    }
    return w;
}

}  // namespace levypide
