#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <variant>

#include "levypide/errors.hpp"
#include "levypide/special_functions.hpp"

namespace levypide {

using Complex = std::complex<double>;

// Shared market data. Rates are per year, sigma per sqrt(year).
struct MarketParams {
    double spot = 100.0;
    double strike = 100.0;
    double rate = 0.0;
    double dividend = 0.0;
    double sigma = 0.0;
    double maturity = 1.0;
    double dtau = 1.0;  // time step of the splitting scheme

    void validate() const {
        if (!(spot > 0.0)) throw DomainError("market: spot must satisfy S0 > 0");
        if (!(strike > 0.0)) throw DomainError("market: strike must satisfy K > 0");
        if (!(sigma >= 0.0)) throw DomainError("market: sigma must satisfy sigma >= 0");
        if (!(dtau > 0.0 && dtau <= maturity + 1e-15))
            throw DomainError("market: time step must satisfy 0 < dtau <= T");
    }
};

// Normal inverse Gaussian jump parameters. The strict bound |beta| < alpha is
// enforced: alpha ~ |beta| degenerates the schemes' eigenvalue bounds.
struct NIGParams {
    double alpha;  // tail steepness
    double beta;   // skew
    double delta;  // scale
    double mu;     // location

    void validate() const {
        if (!(delta > 0.0)) throw DomainError("nig: delta must satisfy delta > 0");
        if (!(std::abs(beta) < alpha)) throw DomainError("nig: require 0 <= |beta| < alpha");
    }
};

// Generalized hyperbolic jump parameters.
struct GHParams {
    double lambda;  // tail weight
    double alpha;
    double beta;
    double delta;
    double mu;

    void validate() const {
        if (!(alpha > 0.0)) throw DomainError("gh: alpha must satisfy alpha > 0");
        if (!(std::abs(beta) < alpha)) throw DomainError("gh: require 0 <= |beta| < alpha");
        if (!(delta > 0.0)) throw DomainError("gh: delta must satisfy delta > 0");
    }
};

// Meixner jump parameters.
struct MeixnerParams {
    double a;
    double b;
    double d;
    double m;  // location

    void validate() const {
        if (!(a > 0.0)) throw DomainError("meixner: a must satisfy a > 0");
        if (!(b > -M_PI && b < M_PI - a)) throw DomainError("meixner: require -pi < b < pi - a");
        if (!(d > 0.0)) throw DomainError("meixner: d must satisfy d > 0");
    }
};

enum class PayoffKind { call, put, digital };

struct Payoff {
    PayoffKind kind = PayoffKind::call;
    double strike = 100.0;

    void validate() const {
        if (!(strike > 0.0)) throw DomainError("payoff: strike must satisfy K > 0");
    }

    double operator()(double S) const {
        switch (kind) {
            case PayoffKind::call: return std::max(S - strike, 0.0);
            case PayoffKind::put: return std::max(strike - S, 0.0);
            case PayoffKind::digital: return S >= strike ? 1.0 : 0.0;
        }
        return 0.0;
    }
};

using JumpParams = std::variant<NIGParams, GHParams, MeixnerParams>;

struct ModelParams {
    JumpParams jump;
    MarketParams market;
};

inline void validate(const JumpParams& jp) {
    std::visit([](const auto& p) { p.validate(); }, jp);
}

inline ModelParams validate(ModelParams p) {
    validate(p.jump);
    p.market.validate();
    return p;
}

inline double location(const JumpParams& jp) {
    if (const auto* n = std::get_if<NIGParams>(&jp)) return n->mu;
    if (const auto* g = std::get_if<GHParams>(&jp)) return g->mu;
    return std::get<MeixnerParams>(jp).m;
}

inline std::string model_name(const JumpParams& jp) {
    if (std::holds_alternative<NIGParams>(jp)) return "nig";
    if (std::holds_alternative<GHParams>(jp)) return "gh";
    return "meixner";
}

namespace detail {

// Strip of regularity: the square-root / secant branch must not be crossed.
inline void check_strip_nig_gh(double alpha, double beta, Complex u, const char* who) {
    if (!(std::abs(beta - u.imag()) < alpha))
        throw DomainError(std::string(who) + ": u outside strip |beta - Im u| < alpha");
}

inline Complex nig_exponent(const NIGParams& p, Complex u) {
    check_strip_nig_gh(p.alpha, p.beta, u, "nig char_exponent");
    const Complex w = p.alpha * p.alpha - (p.beta + Complex(0, 1) * u) * (p.beta + Complex(0, 1) * u);
    const double ab2 = p.alpha * p.alpha - p.beta * p.beta;
    return p.delta * (std::sqrt(ab2) - std::sqrt(w)) + Complex(0, 1) * u * p.mu;
}

inline Complex gh_exponent(const GHParams& p, Complex u) {
    check_strip_nig_gh(p.alpha, p.beta, u, "gh char_exponent");
    const Complex w = p.alpha * p.alpha - (p.beta + Complex(0, 1) * u) * (p.beta + Complex(0, 1) * u);
    const double ab2 = p.alpha * p.alpha - p.beta * p.beta;
    // log Psi with exact scalar Bessel-K evaluations; the operator-level
    // asymptotic truncation lives in gh_jump, not here.
    const Complex log_ratio = (p.lambda / 2.0) * (std::log(Complex(ab2)) - std::log(w));
    const Complex lk1 = log_bessel_k(p.lambda, p.delta * std::sqrt(w));
    const Complex lk0 = log_bessel_k(p.lambda, Complex(p.delta * std::sqrt(ab2)));
    return log_ratio + lk1 - lk0 + Complex(0, 1) * u * p.mu;
}

inline Complex meixner_exponent(const MeixnerParams& p, Complex u) {
    if (!(std::abs(p.a * u.imag() - p.b) < M_PI))
        throw DomainError("meixner char_exponent: u outside strip |a Im u - b| < pi");
    const Complex arg = (p.a * u - Complex(0, 1) * p.b) / 2.0;
    return 2.0 * p.d * (std::log(std::cos(p.b / 2.0)) - std::log(std::cosh(arg))) +
           Complex(0, 1) * u * p.m;
}

}  // namespace detail

// Per-unit-time characteristic exponent phi(u), so that CF(u,t) = exp(t phi(u)).
inline Complex char_exponent(const JumpParams& jp, Complex u) {
    return std::visit([&](const auto& p) -> Complex {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, NIGParams>) return detail::nig_exponent(p, u);
        else if constexpr (std::is_same_v<T, GHParams>) return detail::gh_exponent(p, u);
        else return detail::meixner_exponent(p, u);
    }, jp);
}

// Martingale drift correction c = -phi(-i); adding c to the rate makes the
// discounted asset price a martingale under the jump model.
inline double compensator(const JumpParams& jp) {
    const Complex v = char_exponent(jp, Complex(0.0, -1.0));
    return -v.real();
}

}  // namespace levypide
