#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "transmutant/formal_powers.hpp"
#include "transmutant/goursat.hpp"
#include "transmutant/grid.hpp"
#include "transmutant/transmute.hpp"

namespace transmutant {

/// A potential and its Darboux superpartner built from the solution f.
struct DarbouxPair {
    Potential p1;  // q1 with solution f, f'(0) = h
    Samples q2;    // 2 (f'/f)^2 - q1
    Potential p2;  // q2 with solution 1/f, (1/f)'(0) = -h
};

inline DarbouxPair darboux_transform(const Potential& p1) {
    const Grid& g = p1.grid;
    Samples q2(g), inv_f(g), inv_f_prime(g);
    for (int i = 0; i < g.n_points; ++i) {
        cplx ratio = p1.f_prime[i] / p1.f[i];
        q2[i] = 2.0 * ratio * ratio - p1.q[i];
        inv_f[i] = 1.0 / p1.f[i];
        inv_f_prime[i] = -p1.f_prime[i] / (p1.f[i] * p1.f[i]);
    }
    Potential p2 = build_potential(q2, inv_f, {}, inv_f_prime);
    return {p1, std::move(q2), std::move(p2)};
}

/// Kernel of the Darboux-transformed transmutation at parameter -h:
///   K2(x,t;-h) = -(1/f(x)) ( int_{-t}^{x} dK1/dt(s,t;h) f(s) ds + (h/2) f(-t) ).
/// dK2/dt has no closed form here and falls back to finite differences.
inline TransmutationKernel darboux_kernel(const TransmutationKernel& K1,
                                          const DarbouxPair& pair) {
    if (std::abs(K1.h - pair.p1.h) > 1e-9)
        throw invalid_argument_error("darboux_kernel: K1.h != pair.p1.h");
    if (!(K1.grid == pair.p1.grid))
        throw invalid_argument_error("darboux_kernel: grid mismatch");
    if (K1.Kt.empty())
        throw invalid_argument_error("darboux_kernel: K1 has no dK/dt data");
    const int n = K1.grid.n_points;
    const cplx h = K1.h;
    TransmutationKernel K2;
    K2.grid = K1.grid;
    K2.h = -h;
    K2.provenance = Provenance::darboux;
    K2.kt_finite_difference = true;
    K2.K.resize(static_cast<size_t>(n) * n);
    K2.Kt.resize(static_cast<size_t>(n) * n);
    parallel_for(n, [&](int j) {  // j indexes t columns
        Samples integrand(K1.grid);
        for (int s = 0; s < n; ++s) integrand[s] = K1.dt_at(s, j) * pair.p1.f[s];
        Samples C = cumulative_integral(integrand, 0.0);
        int neg_t = n - 1 - j;  // node index of -t_j
        for (int i = 0; i < n; ++i)
            K2.K[static_cast<size_t>(i) * n + j] =
                -(C[i] - C[neg_t] + h / 2.0 * pair.p1.f[neg_t]) / pair.p1.f[i];
    });
    parallel_for(n, [&](int i) {
        Samples row(K1.grid);
        for (int j = 0; j < n; ++j) row[j] = K2.at(i, j);
        Samples d = derivative(row);
        for (int j = 0; j < n; ++j) K2.Kt[static_cast<size_t>(i) * n + j] = d[j];
    });
    return K2;
}

/// Triangle-data variant of the Darboux kernel for x > 0 rows, reading K1 only
/// on |t| <= s <= x. Rows with x <= 0 and entries with |t| > x are left zero.
inline TransmutationKernel darboux_kernel_triangle(const TransmutationKernel& K1,
                                                   const DarbouxPair& pair) {
    if (std::abs(K1.h - pair.p1.h) > 1e-9)
        throw invalid_argument_error("darboux_kernel_triangle: K1.h != pair.p1.h");
    if (K1.Kt.empty())
        throw invalid_argument_error("darboux_kernel_triangle: K1 has no dK/dt data");
    const int n = K1.grid.n_points;
    const int c = K1.grid.origin_index();
    const cplx h = K1.h;
    Samples Q1 = cumulative_integral(pair.p1.q, 0.0);  // int_0^t q1
    TransmutationKernel K2;
    K2.grid = K1.grid;
    K2.h = -h;
    K2.provenance = Provenance::darboux;
    K2.kt_finite_difference = true;
    K2.K.assign(static_cast<size_t>(n) * n, cplx{});
    K2.Kt.assign(static_cast<size_t>(n) * n, cplx{});
    parallel_for(n, [&](int j) {
        int abs_t = std::max(j, n - 1 - j);  // node index of |t_j|
        Samples integrand(K1.grid);
        for (int s = 0; s < n; ++s) integrand[s] = K1.dt_at(s, j) * pair.p1.f[s];
        // int_{|t|}^{x}: cumulative relative to the |t| node, x >= |t| only
        Samples C = cumulative_integral(integrand, K1.grid.node(abs_t));
        for (int i = abs_t; i < n; ++i) {
            if (i <= c) continue;  // x > 0 rows only
            cplx bracket;
            if (j >= c) {  // t >= 0
                bracket = pair.p1.f_prime[j] + C[i] - h / 2.0 * pair.p1.f[j] -
                          pair.p1.f[j] / 2.0 * Q1[j];
            } else {  // t < 0
                bracket = C[i] + h / 2.0 * pair.p1.f[n - 1 - j];
            }
            K2.K[static_cast<size_t>(i) * n + j] = -bracket / pair.p1.f[i];
        }
    });
    return K2;
}

/// Direct operator form: T2[u](x) = (1/f(x)) ( int_0^x f T1[u'] + u(0) ).
inline Samples apply_T2_direct(const TransmutationKernel& K1, const DarbouxPair& pair,
                               const Samples& u) {
    if (!(u.grid == K1.grid))
        throw invalid_argument_error("apply_T2_direct: grid mismatch");
    Samples du = derivative(u);
    Samples T1du = apply_T(K1, du);
    Samples integrand(u.grid);
    for (int i = 0; i < u.size(); ++i) integrand[i] = pair.p1.f[i] * T1du[i];
    Samples F = cumulative_integral(integrand, 0.0);
    Samples out(u.grid);
    cplx u0 = u[u.grid.origin_index()];
    for (int i = 0; i < u.size(); ++i) out[i] = (F[i] + u0) / pair.p1.f[i];
    return out;
}

/// Interior max-norm residuals of the two commutation relations
///   d/dx (f T2 u) = f T1 u'   and   d/dx ((1/f) T1 u) = (1/f) T2 u'.
inline std::pair<double, double> commutation_residuals(const TransmutationKernel& K1,
                                                       const TransmutationKernel& K2,
                                                       const DarbouxPair& pair,
                                                       const Samples& u) {
    Samples du = derivative(u);
    Samples T1u = apply_T(K1, u), T2u = apply_T(K2, u);
    Samples T1du = apply_T(K1, du), T2du = apply_T(K2, du);
    const Grid& g = u.grid;
    Samples lhs1(g), lhs2(g);
    for (int i = 0; i < g.n_points; ++i) {
        lhs1[i] = pair.p1.f[i] * T2u[i];
        lhs2[i] = T1u[i] / pair.p1.f[i];
    }
    Samples d1 = derivative(lhs1), d2 = derivative(lhs2);
    double r1 = 0.0, r2 = 0.0;
    for (int i = 2; i + 2 < g.n_points; ++i) {
        r1 = std::max(r1, std::abs(d1[i] - pair.p1.f[i] * T1du[i]));
        r2 = std::max(r2, std::abs(d2[i] - T2du[i] / pair.p1.f[i]));
    }
    return {r1, r2};
}

/// Generalized derivative gamma_k: gamma_0(g) = g,
/// gamma_k(g) = (f^2)^{(-1)^{k-1}} (gamma_{k-1}(g))'.
inline Samples generalized_derivative(const DarbouxPair& pair, const Samples& g_in,
                                      int k) {
    if (k < 0) throw invalid_argument_error("generalized_derivative: k must be >= 0");
    Samples g = g_in;
    for (int j = 1; j <= k; ++j) {
        Samples d = derivative(g);
        for (int i = 0; i < g.size(); ++i) {
            cplx f2 = pair.p1.f[i] * pair.p1.f[i];
            g.values[i] = (j % 2 == 1) ? f2 * d[i] : d[i] / f2;
        }
    }
    return g;
}

} // namespace transmutant
