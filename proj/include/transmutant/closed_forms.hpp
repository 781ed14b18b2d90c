#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "transmutant/grid.hpp"

namespace transmutant {

/// Modified Bessel I_nu by ascending power series, summed to relative term < 1e-17.
inline cplx bessel_I0(cplx z) {
    cplx w = z * z;  // series in z^2
    cplx term{1.0};
    cplx sum{1.0};
    for (int k = 1; k < 200; ++k) {
        term *= w / (4.0 * static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

inline cplx bessel_I1(cplx z) {
    cplx w = z * z;
    cplx term = z / 2.0;
    cplx sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= w / (4.0 * static_cast<double>(k) * static_cast<double>(k + 1));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

namespace detail {

// g(w) = z I_1(z) with w = z^2; entire in w, so no branch cut issues for w < 0.
inline cplx zI1_wsq(cplx w) {
    cplx term = w / 2.0;
    cplx sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= w / (4.0 * static_cast<double>(k) * static_cast<double>(k + 1));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

inline cplx I0_wsq(cplx w) {
    cplx term{1.0};
    cplx sum{1.0};
    for (int k = 1; k < 200; ++k) {
        term *= w / (4.0 * static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

} // namespace detail

/// K_1(x,t;-1) = (t-1)/(2(x+1)) for q = 2/(x+1)^2.
inline cplx ref_rational_n1(double x, double t) {
    return cplx{(t - 1.0) / (2.0 * (x + 1.0))};
}
inline cplx ref_rational_n1_dt(double x, double /*t*/) {
    return cplx{1.0 / (2.0 * (x + 1.0))};
}

/// K_1(x,t;2) = (3x^2+6x+4-3t^2+2t)/(4(x+1)) for the same potential.
inline cplx ref_rational_n1_h2(double x, double t) {
    return cplx{(3.0 * x * x + 6.0 * x + 4.0 - 3.0 * t * t + 2.0 * t) / (4.0 * (x + 1.0))};
}
inline cplx ref_rational_n1_h2_dt(double x, double t) {
    return cplx{(2.0 - 6.0 * t) / (4.0 * (x + 1.0))};
}

/// K_2(x,t;-2) = ((3t-1)(x+1)^2 - 3(t-1)^2(t+1))/(4(x+1)^2) for q = 6/(x+1)^2.
inline cplx ref_rational_n2(double x, double t) {
    double xp = x + 1.0;
    return cplx{((3.0 * t - 1.0) * xp * xp - 3.0 * (t - 1.0) * (t - 1.0) * (t + 1.0)) /
                (4.0 * xp * xp)};
}
inline cplx ref_rational_n2_dt(double x, double t) {
    double xp = x + 1.0;
    return cplx{(3.0 * xp * xp - 3.0 * (t - 1.0) * (3.0 * t + 1.0)) / (4.0 * xp * xp)};
}

/// K_1(x,t;0) = (1/2) sqrt(x^2-t^2) I_1(sqrt(x^2-t^2)) / (x-t) for q = 1.
/// Written via the entire function z I_1(z) of w = x^2-t^2; near t = x the
/// removable singularity is evaluated by its Taylor series in (x-t).
/// (The sign is fixed by the Goursat data K(x,x) = x/2, K(x,-x) = 0: the
/// separable solution H(u,v) = (u/2) I_1(2 sqrt(uv))/sqrt(uv) of H_uv = H.)
inline cplx ref_const_q1(double x, double t) {
    double d = x - t;
    double p = x + t;
    if (std::abs(d) < 1e-4) {
        double w = d * p;
        // g(w)/d = (p/2)(1 + w/8 + w^2/192 + w^3/9216)
        return cplx{p / 4.0 * (1.0 + w / 8.0 + w * w / 192.0 + w * w * w / 9216.0)};
    }
    return detail::zI1_wsq(cplx{d * p}) / (2.0 * d);
}

/// dK/dt of ref_const_q1: (1/2)[ z I_1(z)/(x-t)^2 - t I_0(z)/(x-t) ], z^2 = x^2-t^2.
inline cplx ref_const_q1_dt(double x, double t) {
    double d = x - t;
    double p = x + t;
    if (std::abs(d) < 1e-4) {
        // Taylor series in d; the 1/d parts combine to the constant 1/2
        double c0 = 0.5 + p * p / 16.0 - t * p / 4.0;
        double c1 = p * p * p / 384.0 - t * p * p / 64.0;
        double c2 = p * p * p * p / 18432.0 - t * p * p * p / 2304.0;
        return cplx{0.5 * (c0 + c1 * d + c2 * d * d)};
    }
    cplx w{d * p};
    return 0.5 * (detail::zI1_wsq(w) / (d * d) - t * detail::I0_wsq(w) / d);
}

namespace detail {

// Integrand of the soliton kernel quadrature:
//   z I_1(z)/(s-t)^2 - t I_0(z)/(s-t),  z^2 = s^2 - t^2,
// which is obtained by differentiating the constant-potential kernel in t.
// Removable singularity at s = t handled by a Taylor series in (s-t).
inline cplx soliton_integrand(double s, double t) {
    double d = s - t;
    double p = s + t;
    if (std::abs(d) < 1e-4) {
        double c0 = 0.5 + p * p / 16.0 - t * p / 4.0;
        double c1 = p * p * p / 384.0 - t * p * p / 64.0;
        double c2 = p * p * p * p / 18432.0 - t * p * p * p / 2304.0;
        return cplx{c0 + c1 * d + c2 * d * d};
    }
    cplx w{d * p};
    return zI1_wsq(w) / (d * d) - t * I0_wsq(w) / d;
}

} // namespace detail

/// K_2(x,t;0) for q = 1 - 2 sech^2 x, from the Darboux integral representation
///   K_2 = -(1/(2 cosh x)) int_{-t}^{x} [z I_1(z)/(s-t)^2 - t I_0(z)/(s-t)] cosh s ds.
inline cplx ref_soliton(double x, double t) {
    double lo = -t, hi = x;
    if (lo == hi) return cplx{0.0};
    // fixed fine composite Simpson; the integrand is smooth after the series switch
    const int intervals = 2048;
    double h = (hi - lo) / intervals;
    cplx acc{0.0};
    auto g = [&](int k) {
        double s = lo + k * h;
        return detail::soliton_integrand(s, t) * std::cosh(s);
    };
    for (int k = 0; k + 2 <= intervals; k += 2) acc += g(k) + 4.0 * g(k + 1) + g(k + 2);
    acc *= h / 3.0;
    return -acc / (2.0 * std::cosh(x));
}

/// Analytic reference kernel used as an exact oracle.
struct ReferenceKernel {
    std::string name;
    cplx h;
    std::string q_description;
    std::function<cplx(double, double)> evaluator;
    std::function<cplx(double, double)> evaluator_dt;  // may be empty
    double a_max;
};

inline ReferenceKernel reference_kernel(const std::string& name) {
    if (name == "rational_n1")
        return {name, cplx{-1.0}, "q = 2/(x+1)^2", &ref_rational_n1, &ref_rational_n1_dt, 1.0};
    if (name == "rational_n1_h2")
        return {name, cplx{2.0}, "q = 2/(x+1)^2", &ref_rational_n1_h2, &ref_rational_n1_h2_dt, 1.0};
    if (name == "rational_n2")
        return {name, cplx{-2.0}, "q = 6/(x+1)^2", &ref_rational_n2, &ref_rational_n2_dt, 1.0};
    if (name == "const_q1")
        return {name, cplx{0.0}, "q = 1", &ref_const_q1, &ref_const_q1_dt, 1e9};
    if (name == "soliton")
        return {name, cplx{0.0}, "q = 1 - 2 sech^2 x", &ref_soliton, nullptr, 1e9};
    throw invalid_argument_error("unknown reference kernel: " + name);
}

} // namespace transmutant
