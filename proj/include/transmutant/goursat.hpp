#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "transmutant/grid.hpp"
#include "transmutant/parallel.hpp"

namespace transmutant {

enum class Provenance { goursat, closed_form, darboux, reparametrized };

/// Samples of K(x,t;h) and dK/dt on the full square [-a,a]^2, row-major in x.
struct TransmutationKernel {
    Grid grid;
    cplx h{};
    std::vector<cplx> K;   // K[i*n + j] = K(x_i, t_j)
    std::vector<cplx> Kt;  // dK/dt at the same nodes
    Provenance provenance = Provenance::goursat;
    bool kt_finite_difference = false;

    cplx at(int i, int j) const { return K[static_cast<size_t>(i) * grid.n_points + j]; }
    cplx dt_at(int i, int j) const { return Kt[static_cast<size_t>(i) * grid.n_points + j]; }
    const cplx* row(int i) const { return K.data() + static_cast<size_t>(i) * grid.n_points; }
    const cplx* dt_row(int i) const { return Kt.data() + static_cast<size_t>(i) * grid.n_points; }
};

/// Builds a kernel by sampling analytic K and dK/dt evaluators.
inline TransmutationKernel kernel_from_function(
    const Grid& g, cplx h, const std::function<cplx(double, double)>& K,
    const std::function<cplx(double, double)>& Kt) {
    TransmutationKernel ker;
    ker.grid = g;
    ker.h = h;
    ker.provenance = Provenance::closed_form;
    int n = g.n_points;
    ker.K.resize(static_cast<size_t>(n) * n);
    ker.Kt.resize(static_cast<size_t>(n) * n, cplx{});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ker.K[static_cast<size_t>(i) * n + j] = K(g.node(i), g.node(j));
            if (Kt) ker.Kt[static_cast<size_t>(i) * n + j] = Kt(g.node(i), g.node(j));
        }
    if (!Kt) {
        ker.kt_finite_difference = true;
        for (int i = 0; i < n; ++i) {
            Samples row(g);
            for (int j = 0; j < n; ++j) row[j] = ker.at(i, j);
            Samples d = derivative(row);
            for (int j = 0; j < n; ++j) ker.Kt[static_cast<size_t>(i) * n + j] = d[j];
        }
    }
    return ker;
}

/// H(u,v;h) on the characteristic diamond |u|+|v| <= a. The diamond axis is
/// sampled at half the kernel-grid spacing (axis_points = 2*m_points - 1) so
/// that every kernel node (x_i, t_j) maps onto an exact diamond node.
struct DiamondField {
    double half_width = 0.0;
    int m_points = 0;     // kernel-grid resolution derived from this field
    int axis_points = 0;  // 2*m_points - 1
    cplx h{};
    std::vector<cplx> H;      // axis_points^2, row-major in u; zero outside the diamond
    std::vector<cplx> q_sum;  // q(u+v) at diamond nodes
    std::vector<cplx> q_axis;     // q(u) on the u axis
    std::vector<cplx> q_half_int; // (1/2) int_0^u q
    int iterations_used = 0;
    double residual = 0.0;
    bool converged = false;

    int center() const { return axis_points / 2; }
    double axis_spacing() const { return half_width / (m_points - 1); }
    double axis_node(int i) const { return -half_width + i * axis_spacing(); }
    bool in_diamond(int iu, int iv) const {
        int c = center();
        return std::abs(iu - c) + std::abs(iv - c) <= m_points - 1;
    }
    size_t idx(int iu, int iv) const { return static_cast<size_t>(iu) * axis_points + iv; }
};

namespace detail {

// Cumulative integral from the center node outward along one line of a 2D
// field, restricted to the diamond extent of that line.
inline void diamond_cumulative(const cplx* src, cplx* dst, int center, int reach,
                               int stride, double h) {
    auto run = [&](int sgn) {
        std::vector<cplx> F(reach + 1);
        cumulative_march([&](int k) { return src[(center + sgn * k) * stride]; },
                         [&](int k) -> cplx& { return F[k]; }, reach + 1, h);
        for (int k = 0; k <= reach; ++k)
            dst[(center + sgn * k) * stride] = static_cast<double>(sgn) * F[k];
    };
    run(+1);
    if (reach > 0) run(-1);
    dst[center * stride] = cplx{0.0};
}

} // namespace detail

/// Solves the Goursat integral equation for H(u,v;h) by successive approximation
/// on all four triangles of the diamond at once (signed integral limits).
inline DiamondField solve_goursat(const Samples& q, cplx h, int m_points,
                                  double tol = 1e-12, int max_iter = 60) {
    if (m_points < 5 || m_points % 2 == 0)
        throw invalid_argument_error("solve_goursat: m_points must be odd and >= 5");
    if (!(tol > 0.0)) throw invalid_argument_error("solve_goursat: tol must be positive");
    const double a = q.grid.a;

    DiamondField D;
    D.half_width = a;
    D.m_points = m_points;
    D.axis_points = 2 * m_points - 1;
    D.h = h;
    const int M = D.axis_points;
    const int c = D.center();
    const double hu = D.axis_spacing();

    D.H.assign(static_cast<size_t>(M) * M, cplx{});
    D.q_sum.assign(static_cast<size_t>(M) * M, cplx{});
    D.q_axis.assign(M, cplx{});
    D.q_half_int.assign(M, cplx{});

    for (int iu = 0; iu < M; ++iu) D.q_axis[iu] = interpolate(q, D.axis_node(iu));
    for (int iu = 0; iu < M; ++iu) {
        int reach = (m_points - 1) - std::abs(iu - c);
        for (int iv = c - reach; iv <= c + reach; ++iv)
            D.q_sum[D.idx(iu, iv)] = interpolate(q, D.axis_node(iu) + D.axis_node(iv));
    }
    detail::diamond_cumulative(D.q_axis.data(), D.q_half_int.data(), c, c, 1, hu);
    for (auto& v : D.q_half_int) v *= 0.5;

    // zeroth iterate: boundary data only
    for (int iu = 0; iu < M; ++iu) {
        int reach = (m_points - 1) - std::abs(iu - c);
        for (int iv = c - reach; iv <= c + reach; ++iv)
            D.H[D.idx(iu, iv)] = h / 2.0 + D.q_half_int[iu];
    }

    std::vector<cplx> integrand(static_cast<size_t>(M) * M);
    std::vector<cplx> inner(static_cast<size_t>(M) * M);
    std::vector<cplx> outer(static_cast<size_t>(M) * M);
    std::vector<double> row_diff(M);

    for (int iter = 1; iter <= max_iter; ++iter) {
        // inner(u,v) = int_0^v q(u+b) H(u,b) db  (cumulative along v per u row)
        parallel_for(M, [&](int iu) {
            int reach = (m_points - 1) - std::abs(iu - c);
            for (int iv = c - reach; iv <= c + reach; ++iv)
                integrand[D.idx(iu, iv)] = D.q_sum[D.idx(iu, iv)] * D.H[D.idx(iu, iv)];
            detail::diamond_cumulative(&integrand[D.idx(iu, 0)], &inner[D.idx(iu, 0)], c,
                                       reach, 1, hu);
        });
        // outer(u,v) = int_0^u inner(a,v) da  (cumulative along u per v column)
        parallel_for(M, [&](int iv) {
            int reach = (m_points - 1) - std::abs(iv - c);
            detail::diamond_cumulative(&inner[D.idx(0, iv)], &outer[D.idx(0, iv)], c, reach,
                                       M, hu);
        });
        parallel_for(M, [&](int iu) {
            int reach = (m_points - 1) - std::abs(iu - c);
            double local = 0.0;
            for (int iv = c - reach; iv <= c + reach; ++iv) {
                cplx next = h / 2.0 + D.q_half_int[iu] + outer[D.idx(iu, iv)];
                local = std::max(local, std::abs(next - D.H[D.idx(iu, iv)]));
                D.H[D.idx(iu, iv)] = next;
            }
            row_diff[iu] = local;
        });
        double diff = 0.0;
        for (int iu = 0; iu < M; ++iu) diff = std::max(diff, row_diff[iu]);
        D.iterations_used = iter;
        D.residual = diff;
        if (diff <= tol) {
            D.converged = true;
            return D;
        }
    }
    throw convergence_failure("solve_goursat: no convergence", D.residual, D.iterations_used);
}

/// dK/dt on the kernel grid, from the differentiated integral equation
/// (no finite differencing of K):
///   H_u = q(u)/2 + int_0^v q(u+b)H(u,b)db,   H_v = int_0^u q(a+v)H(a,v)da,
///   dK/dt = (H_u - H_v)/2 at u=(x+t)/2, v=(x-t)/2.
inline std::vector<cplx> partial_t_kernel(const DiamondField& D) {
    if (!D.converged) throw invalid_state_error("partial_t_kernel: field not converged");
    const int M = D.axis_points;
    const int c = D.center();
    const int n = D.m_points;
    const double hu = D.axis_spacing();

    std::vector<cplx> integrand(static_cast<size_t>(M) * M);
    std::vector<cplx> Hu(static_cast<size_t>(M) * M);
    std::vector<cplx> Hv(static_cast<size_t>(M) * M);
    parallel_for(M, [&](int iu) {
        int reach = (n - 1) - std::abs(iu - c);
        for (int iv = c - reach; iv <= c + reach; ++iv)
            integrand[D.idx(iu, iv)] = D.q_sum[D.idx(iu, iv)] * D.H[D.idx(iu, iv)];
        detail::diamond_cumulative(&integrand[D.idx(iu, 0)], &Hu[D.idx(iu, 0)], c, reach, 1,
                                   hu);
        for (int iv = c - reach; iv <= c + reach; ++iv)
            Hu[D.idx(iu, iv)] += D.q_axis[iu] / 2.0;
    });
    parallel_for(M, [&](int iv) {
        int reach = (n - 1) - std::abs(iv - c);
        detail::diamond_cumulative(&integrand[D.idx(0, iv)], &Hv[D.idx(0, iv)], c, reach, M,
                                   hu);
    });

    std::vector<cplx> Kt(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int iu = i + j;
            int iv = i - j + (n - 1);
            Kt[static_cast<size_t>(i) * n + j] = (Hu[D.idx(iu, iv)] - Hv[D.idx(iu, iv)]) / 2.0;
        }
    return Kt;
}

/// K(x,t;h) = H((x+t)/2, (x-t)/2; h) on the full square; exact node mapping.
inline TransmutationKernel kernel_from_H(const DiamondField& D) {
    if (!D.converged) throw invalid_state_error("kernel_from_H: field not converged");
    TransmutationKernel ker;
    const int n = D.m_points;
    ker.grid = make_grid(D.half_width, n);
    ker.h = D.h;
    ker.provenance = Provenance::goursat;
    ker.K.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int iu = i + j;
            int iv = i - j + (n - 1);
            ker.K[static_cast<size_t>(i) * n + j] = D.H[D.idx(iu, iv)];
        }
    ker.Kt = partial_t_kernel(D);
    return ker;
}

/// K(x,t;h_new) from K(x,t;h) by the change-of-parameter formula.
inline TransmutationKernel reparametrize_h(const TransmutationKernel& K, cplx h_new) {
    if (h_new == K.h) return K;
    const int n = K.grid.n_points;
    const cplx d2 = (h_new - K.h) / 2.0;
    TransmutationKernel out;
    out.grid = K.grid;
    out.h = h_new;
    out.provenance = Provenance::reparametrized;
    out.kt_finite_difference = K.kt_finite_difference;
    out.K.resize(static_cast<size_t>(n) * n);
    out.Kt.resize(static_cast<size_t>(n) * n);
    parallel_for(n, [&](int i) {
        Samples odd_part(K.grid);  // g(s) = K(x_i,s) - K(x_i,-s)
        for (int j = 0; j < n; ++j) odd_part[j] = K.at(i, j) - K.at(i, n - 1 - j);
        Samples G = cumulative_integral(odd_part, 0.0);
        for (int j = 0; j < n; ++j) {
            // int_t^x g = G(x) - G(t)
            out.K[static_cast<size_t>(i) * n + j] = d2 + K.at(i, j) + d2 * (G[i] - G[j]);
            out.Kt[static_cast<size_t>(i) * n + j] = K.dt_at(i, j) - d2 * odd_part[j];
        }
    });
    return out;
}

/// Max finite-difference defect of the hyperbolic PDE plus the max boundary
/// condition defect; a diagnostic, not thresholded here.
inline double goursat_residual(const TransmutationKernel& K, const Samples& q) {
    const int n = K.grid.n_points;
    const Grid& g = K.grid;
    // PDE defect on interior nodes
    std::vector<double> row_max(n, 0.0);
    parallel_for(n, [&](int i) {
        if (i == 0 || i == n - 1) return;
        double local = 0.0;
        const double h2 = g.spacing * g.spacing;
        for (int j = 1; j + 1 < n; ++j) {
            cplx kxx = (K.at(i - 1, j) - 2.0 * K.at(i, j) + K.at(i + 1, j)) / h2;
            cplx ktt = (K.at(i, j - 1) - 2.0 * K.at(i, j) + K.at(i, j + 1)) / h2;
            cplx defect = kxx - interpolate(q, g.node(i)) * K.at(i, j) - ktt;
            local = std::max(local, std::abs(defect));
        }
        row_max[i] = local;
    });
    double pde = 0.0;
    for (double v : row_max) pde = std::max(pde, v);

    Samples q_on_grid = sample(g, [&](double x) { return interpolate(q, x); });
    Samples Qhalf = cumulative_integral(q_on_grid, 0.0);
    double bc = 0.0;
    for (int i = 0; i < n; ++i) {
        cplx diag = K.at(i, i) - K.h / 2.0 - 0.5 * Qhalf[i];
        cplx anti = K.at(i, n - 1 - i) - K.h / 2.0;
        bc = std::max(bc, std::max(std::abs(diag), std::abs(anti)));
    }
    return pde + bc;
}

} // namespace transmutant
