#pragma once

#include <cmath>
#include <utility>

#include "transmutant/goursat.hpp"
#include "transmutant/grid.hpp"
#include "transmutant/parallel.hpp"

namespace transmutant {

namespace detail {

// sin(w t)/w with the removable limit t at w -> 0, stable for small |w t|.
inline cplx sinc_over_omega(cplx w, double t) {
    cplx z = w * t;
    if (std::abs(z) < 1e-4) {
        cplx z2 = z * z;
        return t * (1.0 - z2 / 6.0 + z2 * z2 / 120.0);
    }
    return std::sin(z) / w;
}

} // namespace detail

/// T_h u(x) = u(x) + int_{-x}^{x} K(x,t;h) u(t) dt, node-wise by row quadrature.
/// The range [-x_i, x_i] is symmetric around the origin node, so the number of
/// sub-intervals is always even and composite Simpson applies directly.
inline Samples apply_T(const TransmutationKernel& K, const Samples& u) {
    if (!(u.grid == K.grid))
        throw invalid_argument_error("apply_T: grid mismatch");
    const int n = K.grid.n_points;
    Samples out(u.grid);
    parallel_for(n, [&](int i) {
        int lo = std::min(i, n - 1 - i);
        int hi = std::max(i, n - 1 - i);
        double sgn = (i >= n - 1 - i) ? 1.0 : -1.0;
        const cplx* row = K.row(i);
        cplx integral = detail::simpson_even(
            [&](int k) { return row[lo + k] * u[lo + k]; }, hi - lo, K.grid.spacing);
        out[i] = u[i] + sgn * integral;
    });
    return out;
}

/// T_h^{-1} v(x) = v(x) - int_{-x}^{x} K(t,x;h) v(t) dt (transposed kernel read).
inline Samples apply_T_inverse(const TransmutationKernel& K, const Samples& v) {
    if (!(v.grid == K.grid))
        throw invalid_argument_error("apply_T_inverse: grid mismatch");
    const int n = K.grid.n_points;
    Samples out(v.grid);
    parallel_for(n, [&](int i) {
        int lo = std::min(i, n - 1 - i);
        int hi = std::max(i, n - 1 - i);
        double sgn = (i >= n - 1 - i) ? 1.0 : -1.0;
        cplx integral = detail::simpson_even(
            [&](int k) { return K.at(lo + k, i) * v[lo + k]; }, hi - lo, K.grid.spacing);
        out[i] = v[i] - sgn * integral;
    });
    return out;
}

enum class HalfLineKind { cosine, sine };

/// Marchenko half-line kernel K_c(x,t;h) or K_s(x,t;infinity). The defining
/// combinations of K(x,t) extend to the whole square, which is what the
/// solution formulas need for x < 0; only 0 <= t <= x is quoted in results.
struct HalfLineKernel {
    Grid grid;
    HalfLineKind kind{};
    cplx h{};  // meaningful for the cosine kind only
    std::vector<cplx> values;  // full square, row-major in x

    cplx at(int i, int j) const { return values[static_cast<size_t>(i) * grid.n_points + j]; }
};

/// Builds (K_c, K_s) from a parametrized kernel. The K(x,t) entries use the
/// h = 0 base kernel; the h of K_c is taken from K.h.
inline std::pair<HalfLineKernel, HalfLineKernel> half_line_kernels(
    const TransmutationKernel& K) {
    TransmutationKernel base = reparametrize_h(K, cplx{0.0});
    const int n = K.grid.n_points;
    const cplx h = K.h;
    HalfLineKernel kc{K.grid, HalfLineKind::cosine, h, {}};
    HalfLineKernel ks{K.grid, HalfLineKind::sine, cplx{}, {}};
    kc.values.resize(static_cast<size_t>(n) * n);
    ks.values.resize(static_cast<size_t>(n) * n);
    parallel_for(n, [&](int i) {
        Samples odd_part(K.grid);
        for (int j = 0; j < n; ++j) odd_part[j] = base.at(i, j) - base.at(i, n - 1 - j);
        Samples G = cumulative_integral(odd_part, 0.0);
        for (int j = 0; j < n; ++j) {
            ks.values[static_cast<size_t>(i) * n + j] = odd_part[j];
            kc.values[static_cast<size_t>(i) * n + j] =
                h + base.at(i, j) + base.at(i, n - 1 - j) + h * (G[i] - G[j]);
        }
    });
    return {std::move(kc), std::move(ks)};
}

namespace detail {

// int_0^{x_i} row(t) dt by the same marching rule as cumulative_integral.
inline cplx integrate_from_origin(const Samples& row, int i) {
    Samples F = cumulative_integral(row, 0.0);
    return F[i];
}

} // namespace detail

/// T_c u(x) = u(x) + int_0^x K_c(x,t) u(t) dt (likewise T_s with K_s).
inline Samples apply_half_line(const HalfLineKernel& K, const Samples& u) {
    if (!(u.grid == K.grid))
        throw invalid_argument_error("apply_half_line: grid mismatch");
    const int n = K.grid.n_points;
    Samples out(u.grid);
    parallel_for(n, [&](int i) {
        Samples integrand(K.grid);
        for (int j = 0; j < n; ++j) integrand[j] = K.at(i, j) * u[j];
        out[i] = u[i] + detail::integrate_from_origin(integrand, i);
    });
    return out;
}

/// c(w,x;h) = cos(wx) + int_0^x K_c(x,t;h) cos(wt) dt.
inline Samples solution_c(const TransmutationKernel& K, cplx omega) {
    auto [kc, ks] = half_line_kernels(K);
    (void)ks;
    const int n = K.grid.n_points;
    Samples out(K.grid);
    parallel_for(n, [&](int i) {
        Samples integrand(K.grid);
        for (int j = 0; j < n; ++j)
            integrand[j] = kc.at(i, j) * std::cos(omega * K.grid.node(j));
        out[i] = std::cos(omega * K.grid.node(i)) + detail::integrate_from_origin(integrand, i);
    });
    return out;
}

/// s(w,x;inf) = sin(wx)/w + int_0^x K_s(x,t) sin(wt)/w dt, with the w -> 0 limit
/// handled by series.
inline Samples solution_s(const TransmutationKernel& K, cplx omega) {
    auto [kc, ks] = half_line_kernels(K);
    (void)kc;
    const int n = K.grid.n_points;
    Samples out(K.grid);
    parallel_for(n, [&](int i) {
        Samples integrand(K.grid);
        for (int j = 0; j < n; ++j)
            integrand[j] = ks.at(i, j) * detail::sinc_over_omega(omega, K.grid.node(j));
        out[i] = detail::sinc_over_omega(omega, K.grid.node(i)) +
                 detail::integrate_from_origin(integrand, i);
    });
    return out;
}

/// e_0(iw, x) = T[exp(iwx)] with the h = 0 kernel.
inline Samples solution_e0(const TransmutationKernel& K, cplx omega) {
    TransmutationKernel base = reparametrize_h(K, cplx{0.0});
    const cplx iw = cplx{0.0, 1.0} * omega;
    Samples e = sample(K.grid, [&](double x) { return std::exp(iw * x); });
    return apply_T(base, e);
}

} // namespace transmutant
