#pragma once

#include <cmath>
#include <vector>

#include "transmutant/darboux.hpp"
#include "transmutant/formal_powers.hpp"
#include "transmutant/goursat.hpp"
#include "transmutant/grid.hpp"
#include "transmutant/transmute.hpp"

namespace transmutant {

/// 1D Dirac system with a Lorentz scalar potential S and mass m > 0; eta = m + S.
struct DiracConfig {
    Grid grid;
    double m = 0.0;
    Samples S;
    Samples eta;
    std::vector<cplx> E;
};

inline DiracConfig make_dirac_config(const Grid& g, double m, const Samples& S,
                                     std::vector<cplx> E = {}) {
    if (!(m > 0.0)) throw invalid_argument_error("dirac: mass must be positive");
    if (!(S.grid == g)) throw invalid_argument_error("dirac: S grid mismatch");
    DiracConfig cfg{g, m, S, Samples(g), std::move(E)};
    for (int i = 0; i < g.n_points; ++i) cfg.eta[i] = m + S[i];
    return cfg;
}

struct Spinor {
    Samples psi1;
    Samples psi2;
};

/// The factorizing profile f = exp(-int_0^x eta), with f' = -eta f and
/// q1 = eta^2 - eta' (eta' by finite differences).
inline Potential dirac_profile(const DiracConfig& cfg) {
    const Grid& g = cfg.grid;
    Samples integral = cumulative_integral(cfg.eta, 0.0);
    Samples f(g), fp(g), q1(g);
    Samples eta_prime = derivative(cfg.eta);
    for (int i = 0; i < g.n_points; ++i) {
        f[i] = std::exp(-integral[i]);
        fp[i] = -cfg.eta[i] * f[i];
        q1[i] = cfg.eta[i] * cfg.eta[i] - eta_prime[i];
    }
    return build_potential(q1, f, {}, fp);
}

/// Solution of u1' = E u2, u2' = -E u1 with u(0) = (c1, c2).
inline Spinor free_dirac_solution(cplx E, cplx c1, cplx c2, const Grid& g) {
    Spinor s{Samples(g), Samples(g)};
    for (int i = 0; i < g.n_points; ++i) {
        double x = g.node(i);
        cplx cs = std::cos(E * x), sn = std::sin(E * x);
        s.psi1[i] = c1 * cs + c2 * sn;
        s.psi2[i] = -c1 * sn + c2 * cs;
    }
    return s;
}

/// (psi1, psi2) = (T1 u1, T2 u2); K1 at h = f'(0), K2 its Darboux kernel at -h.
inline Spinor dirac_transmute(const TransmutationKernel& K1,
                              const TransmutationKernel& K2, const Spinor& u) {
    if (!(u.psi1.grid == K1.grid) || !(u.psi2.grid == K2.grid))
        throw invalid_argument_error("dirac_transmute: grid mismatch");
    return {apply_T(K1, u.psi1), apply_T(K2, u.psi2)};
}

inline Spinor dirac_untransmute(const TransmutationKernel& K1,
                                const TransmutationKernel& K2, const Spinor& psi) {
    if (!(psi.psi1.grid == K1.grid) || !(psi.psi2.grid == K2.grid))
        throw invalid_argument_error("dirac_untransmute: grid mismatch");
    return {apply_T_inverse(K1, psi.psi1), apply_T_inverse(K2, psi.psi2)};
}

/// Max interior-node defect of (d/dx + eta) psi1 = E psi2 and
/// (-d/dx + eta) psi2 = E psi1.
inline double dirac_residual(const DiracConfig& cfg, const Spinor& psi, cplx E) {
    Samples d1 = derivative(psi.psi1);
    Samples d2 = derivative(psi.psi2);
    double r = 0.0;
    for (int i = 2; i + 2 < cfg.grid.n_points; ++i) {
        cplx e1 = d1[i] + cfg.eta[i] * psi.psi1[i] - E * psi.psi2[i];
        cplx e2 = -d2[i] + cfg.eta[i] * psi.psi2[i] - E * psi.psi1[i];
        r = std::max(r, std::max(std::abs(e1), std::abs(e2)));
    }
    return r;
}

} // namespace transmutant
