#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "transmutant/goursat.hpp"
#include "transmutant/grid.hpp"
#include "transmutant/transmute.hpp"

namespace transmutant {

/// A potential q together with a chosen nonvanishing solution f of f'' = q f,
/// normalized as f(0) = 1, f'(0) = h.
struct Potential {
    Grid grid;
    Samples q;
    Samples f;
    Samples f_prime;
    cplx h{};
    double min_abs_f = 0.0;
};

namespace detail {

inline double residual_threshold(const Samples& f, const Samples& q) {
    // The centered check of f'' = q f carries an O(h^2 f'''') discretization
    // defect of its own; estimate f'''' by iterated second differences on the
    // interior and allow for it with a generous safety factor.
    double s = f.grid.spacing;
    Samples f4 = second_derivative(second_derivative(f));
    double m4 = 0.0;
    for (int i = 2; i + 2 < f.grid.n_points; ++i) m4 = std::max(m4, std::abs(f4[i]));
    return std::max(5e-4, std::max(0.5 * s * s * m4,
                                   2.0 * s * s * max_abs(f) * (1.0 + max_abs(q))));
}

inline void validate_potential(Potential& p) {
    double mn = 1e300;
    for (const auto& v : p.f.values) mn = std::min(mn, std::abs(v));
    p.min_abs_f = mn;
    if (mn < 1e-8)
        throw vanishing_solution_error("potential: |f| dips below 1e-8");
    Samples fpp = second_derivative(p.f);
    double defect = 0.0;
    for (int i = 1; i + 1 < p.grid.n_points; ++i)
        defect = std::max(defect, std::abs(fpp[i] - p.q[i] * p.f[i]));
    if (defect > residual_threshold(p.f, p.q))
        throw inconsistent_input_error("potential: f'' - q f residual too large");
}

// RK4 on the first-order system (f, f') with f'' = q f, marching from the
// origin in both directions; q at half steps by interpolation.
inline void integrate_f(const Samples& q, cplx h, Samples& f, Samples& fp) {
    const Grid& g = q.grid;
    int c = g.origin_index();
    f[c] = cplx{1.0};
    fp[c] = h;
    auto rhs = [&](double x, cplx y, cplx yp, cplx& dy, cplx& dyp) {
        dy = yp;
        dyp = interpolate(q, x) * y;
    };
    auto march = [&](int sgn) {
        double step = sgn * g.spacing;
        cplx y = f[c], yp = fp[c];
        for (int i = c + sgn; i >= 0 && i < g.n_points; i += sgn) {
            double x = g.node(i - sgn);
            cplx k1, k1p, k2, k2p, k3, k3p, k4, k4p;
            rhs(x, y, yp, k1, k1p);
            rhs(x + step / 2, y + step / 2 * k1, yp + step / 2 * k1p, k2, k2p);
            rhs(x + step / 2, y + step / 2 * k2, yp + step / 2 * k2p, k3, k3p);
            rhs(x + step, y + step * k3, yp + step * k3p, k4, k4p);
            y += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            yp += step / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
            f[i] = y;
            fp[i] = yp;
        }
    };
    march(+1);
    march(-1);
}

} // namespace detail

/// Builds a Potential. When f is absent it is computed by integrating
/// f'' = q f with f(0) = 1, f'(0) = h. When f is supplied its value at 0 is
/// normalized to 1 and f' comes from fourth-order differences unless given.
inline Potential build_potential(const Samples& q, std::optional<Samples> f = {},
                                 std::optional<cplx> h = {},
                                 std::optional<Samples> f_prime = {}) {
    Potential p;
    p.grid = q.grid;
    p.q = q;
    if (f) {
        p.f = *f;
        if (!(p.f.grid == q.grid))
            throw invalid_argument_error("build_potential: f grid mismatch");
        cplx f0 = p.f[q.grid.origin_index()];
        if (std::abs(f0) < 1e-12)
            throw vanishing_solution_error("build_potential: f(0) = 0");
        if (std::abs(f0 - 1.0) > 1e-14)
            for (auto& v : p.f.values) v /= f0;
        p.f_prime = f_prime ? *f_prime : derivative(p.f);
        if (f_prime && std::abs(f0 - 1.0) > 1e-14)
            for (auto& v : p.f_prime.values) v /= f0;
        p.h = p.f_prime[q.grid.origin_index()];
    } else {
        if (!h)
            throw invalid_argument_error("build_potential: need f or h");
        p.f = Samples(q.grid);
        p.f_prime = Samples(q.grid);
        detail::integrate_f(q, *h, p.f, p.f_prime);
        p.h = *h;
    }
    detail::validate_potential(p);
    return p;
}

/// Recursive integrals X^(k), X~^(k) and the formal powers phi_k, psi_k.
struct FormalPowerTable {
    Potential potential;
    double x0 = 0.0;
    int k_max = 0;
    std::vector<Samples> X;
    std::vector<Samples> X_tilde;
    std::vector<Samples> phi;
    std::vector<Samples> psi;
};

inline FormalPowerTable build_table(const Potential& p, double x0, int k_max) {
    if (k_max < 0) throw invalid_argument_error("build_table: k_max must be >= 0");
    if (p.grid.index_of(x0) < 0)
        throw invalid_argument_error("build_table: x0 is not a grid node");
    FormalPowerTable t;
    t.potential = p;
    t.x0 = x0;
    t.k_max = k_max;
    const Grid& g = p.grid;
    Samples f2(g), inv_f2(g);
    for (int i = 0; i < g.n_points; ++i) {
        f2[i] = p.f[i] * p.f[i];
        inv_f2[i] = 1.0 / f2[i];
    }
    Samples ones(g);
    for (auto& v : ones.values) v = cplx{1.0};
    t.X.push_back(ones);
    t.X_tilde.push_back(ones);
    for (int k = 1; k <= k_max; ++k) {
        // X^(k) integrand uses (f^2)^{(-1)^k}, X~^(k) uses (f^2)^{(-1)^{k-1}}
        const Samples& wX = (k % 2 == 0) ? f2 : inv_f2;
        const Samples& wXt = (k % 2 == 0) ? inv_f2 : f2;
        Samples gX(g), gXt(g);
        for (int i = 0; i < g.n_points; ++i) {
            gX[i] = t.X[k - 1][i] * wX[i];
            gXt[i] = t.X_tilde[k - 1][i] * wXt[i];
        }
        Samples FX = cumulative_integral(gX, x0);
        Samples FXt = cumulative_integral(gXt, x0);
        for (int i = 0; i < g.n_points; ++i) {
            FX[i] *= static_cast<double>(k);
            FXt[i] *= static_cast<double>(k);
        }
        t.X.push_back(std::move(FX));
        t.X_tilde.push_back(std::move(FXt));
    }
    for (int k = 0; k <= k_max; ++k) {
        Samples ph(g), ps(g);
        const Samples& for_phi = (k % 2 == 1) ? t.X[k] : t.X_tilde[k];
        const Samples& for_psi = (k % 2 == 0) ? t.X[k] : t.X_tilde[k];
        for (int i = 0; i < g.n_points; ++i) {
            ph[i] = p.f[i] * for_phi[i];
            ps[i] = for_psi[i] / p.f[i];
        }
        t.phi.push_back(std::move(ph));
        t.psi.push_back(std::move(ps));
    }
    return t;
}

/// Truncated SPPS series u1 = sum lambda^k/(2k)! phi_{2k},
/// u2 = sum lambda^k/(2k+1)! phi_{2k+1}; stops early once the last term is
/// negligible relative to the partial sum.
inline std::pair<Samples, Samples> spps_solution(const Potential& p, cplx lambda,
                                                 int k_max) {
    FormalPowerTable t = build_table(p, 0.0, k_max);
    Samples u1(p.grid), u2(p.grid);
    cplx coeff1{1.0}, coeff2{1.0};
    double scale1 = 0.0, scale2 = 0.0;
    for (int k = 0; 2 * k <= k_max; ++k) {
        if (k > 0) {
            coeff1 *= lambda / (static_cast<double>(2 * k - 1) * static_cast<double>(2 * k));
            coeff2 *= lambda / (static_cast<double>(2 * k) * static_cast<double>(2 * k + 1));
        }
        double t1 = 0.0, t2 = 0.0;
        for (int i = 0; i < p.grid.n_points; ++i) {
            cplx a = coeff1 * t.phi[2 * k][i];
            u1[i] += a;
            t1 = std::max(t1, std::abs(a));
        }
        if (2 * k + 1 <= k_max) {
            for (int i = 0; i < p.grid.n_points; ++i) {
                cplx b = coeff2 * t.phi[2 * k + 1][i];
                u2[i] += b;
                t2 = std::max(t2, std::abs(b));
            }
        }
        scale1 = std::max(scale1, max_abs(u1));
        scale2 = std::max(scale2, max_abs(u2));
        if (k > 0 && t1 < 1e-15 * scale1 && t2 < 1e-15 * std::max(scale2, 1.0)) break;
    }
    return {std::move(u1), std::move(u2)};
}

/// Max-norm of apply_T(K, x^k) - phi_k (Theorem on transmutation of powers).
inline double verify_power_mapping(const TransmutationKernel& K,
                                   const FormalPowerTable& table, int k) {
    if (std::abs(K.h - table.potential.h) > 1e-9)
        throw invalid_argument_error("verify_power_mapping: h mismatch");
    if (!(K.grid == table.potential.grid))
        throw invalid_argument_error("verify_power_mapping: grid mismatch");
    Samples mono = sample(K.grid, [&](double x) { return cplx{std::pow(x, k)}; });
    Samples image = apply_T(K, mono);
    return max_abs_diff(image, table.phi[k]);
}

} // namespace transmutant
