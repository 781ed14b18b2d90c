#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "transmutant/closed_forms.hpp"
#include "transmutant/formal_powers.hpp"
#include "transmutant/goursat.hpp"
#include "transmutant/transmute.hpp"

using namespace transmutant;

namespace {

Samples q_rational(const Grid& g, double coeff = 2.0) {
    return sample(g, [coeff](double x) { return cplx{coeff / ((x + 1.0) * (x + 1.0))}; });
}

Samples q_zero(const Grid& g) {
    return sample(g, [](double) { return cplx{0.0}; });
}

} // namespace

TEST_CASE("build_potential integrates f from q and h") {
    Grid g = make_grid(0.5, 401);

    Potential lin = build_potential(q_zero(g), {}, cplx{1.0});
    for (int i = 0; i < g.n_points; ++i) {
        CHECK(std::abs(lin.f[i] - cplx{1.0 + g.node(i)}) < 1e-10);
        CHECK(std::abs(lin.f_prime[i] - cplx{1.0}) < 1e-10);
    }

    Potential sq = build_potential(q_rational(g), {}, cplx{2.0});
    for (int i = 0; i < g.n_points; ++i) {
        double xp = g.node(i) + 1.0;
        CHECK(std::abs(sq.f[i] - cplx{xp * xp}) < 1e-8);
        CHECK(std::abs(sq.f_prime[i] - cplx{2.0 * xp}) < 1e-8);
    }

    Grid g1 = make_grid(1.0, 401);
    Samples qc = sample(g1, [](double) { return cplx{1.0}; });
    Potential ch = build_potential(qc, {}, cplx{0.0});
    for (int i = 0; i < g1.n_points; ++i) {
        CHECK(std::abs(ch.f[i] - cplx{std::cosh(g1.node(i))}) < 1e-8);
        CHECK(std::abs(ch.f_prime[i] - cplx{std::sinh(g1.node(i))}) < 1e-8);
    }
    CHECK(ch.min_abs_f >= 1.0 - 1e-12);
}

TEST_CASE("build_potential with a supplied solution") {
    Grid g = make_grid(0.5, 401);
    Samples f = sample(g, [](double x) { return cplx{3.0 / (x + 1.0)}; });  // not normalized
    Samples fp = sample(g, [](double x) { return cplx{-3.0 / ((x + 1.0) * (x + 1.0))}; });
    Potential p = build_potential(q_rational(g), f, {}, fp);
    CHECK(std::abs(p.f[g.origin_index()] - cplx{1.0}) < 1e-14);
    CHECK(std::abs(p.h - cplx{-1.0}) < 1e-12);
    for (int i = 0; i < g.n_points; ++i)
        CHECK(std::abs(p.f[i] - cplx{1.0 / (g.node(i) + 1.0)}) < 1e-12);
}

TEST_CASE("build_potential error paths") {
    Grid g = make_grid(1.0, 201);
    CHECK_THROWS_AS(build_potential(q_zero(g)), invalid_argument_error);
    // f = 1 - 2x vanishes at x = 0.5
    CHECK_THROWS_AS(build_potential(q_zero(g), {}, cplx{-2.0}), vanishing_solution_error);
    // f = x vanishes at the origin
    Samples fx = sample(g, [](double x) { return cplx{x}; });
    CHECK_THROWS_AS(build_potential(q_zero(g), fx), vanishing_solution_error);
    // f = cos x does not solve f'' = 0
    Samples fc = sample(g, [](double x) { return cplx{std::cos(x)}; });
    CHECK_THROWS_AS(build_potential(q_zero(g), fc), inconsistent_input_error);
}

TEST_CASE("formal powers of the trivial solution are monomials") {
    Grid g = make_grid(1.0, 401);
    Potential p = build_potential(q_zero(g), {}, cplx{0.0});
    FormalPowerTable t = build_table(p, 0.0, 6);
    for (int k = 0; k <= 6; ++k)
        for (int i = 0; i < g.n_points; ++i) {
            double x = g.node(i);
            CHECK(std::abs(t.phi[k][i] - cplx{std::pow(x, k)}) < 1e-8);
            CHECK(std::abs(t.psi[k][i] - cplx{std::pow(x, k)}) < 1e-8);
        }
}

TEST_CASE("printed formal powers of f = 1/(x+1)") {
    Grid g = make_grid(0.5, 401);
    Samples f = sample(g, [](double x) { return cplx{1.0 / (x + 1.0)}; });
    Samples fp = sample(g, [](double x) { return cplx{-1.0 / ((x + 1.0) * (x + 1.0))}; });
    Potential p = build_potential(q_rational(g), f, {}, fp);
    FormalPowerTable t = build_table(p, 0.0, 2);
    for (int i = 0; i < g.n_points; ++i) {
        double x = g.node(i);
        CHECK(std::abs(t.phi[0][i] - cplx{1.0 / (x + 1.0)}) < 1e-10);
        cplx phi1{(x * x * x + 3.0 * x * x + 3.0 * x) / (3.0 * (x + 1.0))};
        CHECK(std::abs(t.phi[1][i] - phi1) < 1e-8);
        cplx phi2{(2.0 * x * x * x + 3.0 * x * x) / (3.0 * (x + 1.0))};
        CHECK(std::abs(t.phi[2][i] - phi2) < 1e-8);
    }
}

TEST_CASE("table boundary invariants") {
    Grid g = make_grid(0.5, 401);
    Samples f = sample(g, [](double x) { return cplx{1.0 / (x + 1.0)}; });
    Potential p = build_potential(q_rational(g), f);
    FormalPowerTable t = build_table(p, 0.0, 5);
    int c = g.origin_index();
    for (int i = 0; i < g.n_points; ++i) {
        CHECK(t.X[0][i] == cplx{1.0});
        CHECK(t.X_tilde[0][i] == cplx{1.0});
    }
    CHECK(std::abs(t.phi[0][c] - p.f[c]) < 1e-14);
    CHECK(std::abs(t.psi[0][c] - 1.0 / p.f[c]) < 1e-14);
    for (int k = 1; k <= 5; ++k) {
        CHECK(std::abs(t.phi[k][c]) < 1e-14);
        CHECK(std::abs(t.psi[k][c]) < 1e-14);
    }
    CHECK_THROWS_AS(build_table(p, 0.1234, 2), invalid_argument_error);
    CHECK_THROWS_AS(build_table(p, 0.0, -1), invalid_argument_error);
}

TEST_CASE("psi of f equals phi of 1/f") {
    Grid g = make_grid(0.5, 401);
    Samples fup = sample(g, [](double x) { return cplx{x + 1.0}; });
    Samples fdn = sample(g, [](double x) { return cplx{1.0 / (x + 1.0)}; });
    Potential up = build_potential(q_zero(g), fup);
    Potential dn = build_potential(q_rational(g), fdn);
    FormalPowerTable tu = build_table(up, 0.0, 5);
    FormalPowerTable td = build_table(dn, 0.0, 5);
    for (int k = 0; k <= 5; ++k)
        for (int i = 0; i < g.n_points; ++i) {
            CHECK(std::abs(tu.psi[k][i] - td.phi[k][i]) < 1e-10);
            CHECK(std::abs(tu.phi[k][i] - td.psi[k][i]) < 1e-10);
        }
}

TEST_CASE("recursion derivative identity") {
    Grid g = make_grid(0.5, 401);
    Samples f = sample(g, [](double x) { return cplx{1.0 / (x + 1.0)}; });
    Potential p = build_potential(q_rational(g), f);
    FormalPowerTable t = build_table(p, 0.0, 4);
    for (int n = 1; n <= 4; ++n) {
        Samples d = derivative(t.X[n]);
        double worst = 0.0;
        for (int i = 2; i + 2 < g.n_points; ++i) {
            cplx w = (n % 2 == 0) ? p.f[i] * p.f[i] : 1.0 / (p.f[i] * p.f[i]);
            worst = std::max(worst,
                             std::abs(d[i] - static_cast<double>(n) * t.X[n - 1][i] * w));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("spps free solutions") {
    Grid g = make_grid(1.0, 401);
    Potential p = build_potential(q_zero(g), {}, cplx{0.0});
    auto [u1, u2] = spps_solution(p, cplx{-1.0}, 20);
    for (int i = 0; i < g.n_points; ++i) {
        double x = g.node(i);
        CHECK(std::abs(u1[i] - cplx{std::cos(x)}) < 1e-10);
        CHECK(std::abs(u2[i] - cplx{std::sin(x)}) < 1e-10);
    }
}

TEST_CASE("spps initial values") {
    Grid g = make_grid(0.5, 401);
    Samples f = sample(g, [](double x) { return cplx{1.0 / (x + 1.0)}; });
    Potential p = build_potential(q_rational(g), f);
    auto [u1, u2] = spps_solution(p, cplx{2.0}, 24);
    int c = g.origin_index();
    CHECK(std::abs(u1[c] - cplx{1.0}) < 1e-13);
    CHECK(std::abs(u2[c]) < 1e-13);
    CHECK(std::abs(derivative_at_origin(u2) - cplx{1.0}) < 5e-5);
}

TEST_CASE("spps reproduces the printed rational solution") {
    Grid g = make_grid(0.5, 401);
    Samples f = sample(g, [](double x) { return cplx{1.0 / (x + 1.0)}; });
    Potential p = build_potential(q_rational(g), f);
    auto [u1, u2] = spps_solution(p, cplx{-1.0}, 30);
    (void)u2;
    for (int i = 0; i < g.n_points; ++i) {
        double x = g.node(i);
        CHECK(std::abs(u1[i] - cplx{std::cos(x) - std::sin(x) / (x + 1.0)}) < 1e-8);
    }
}

TEST_CASE("spps solutions satisfy the ODE") {
    Grid g = make_grid(0.5, 401);
    Samples f = sample(g, [](double x) { return cplx{1.0 / (x + 1.0)}; });
    Potential p = build_potential(q_rational(g), f);
    for (double lam : {-4.0, -1.0, 1.0}) {
        auto [u1, u2] = spps_solution(p, cplx{lam}, 30);
        for (const Samples& u : {u1, u2}) {
            Samples dd = second_derivative(u);
            double worst = 0.0;
            for (int i = 1; i + 1 < g.n_points; ++i)
                worst = std::max(worst, std::abs(dd[i] - p.q[i] * u[i] - lam * u[i]));
            CHECK(worst < 5e-4);
        }
    }
}

TEST_CASE("kernels map monomials onto formal powers") {
    Grid g = make_grid(0.5, 401);
    Samples f = sample(g, [](double x) { return cplx{1.0 / (x + 1.0)}; });
    Potential p = build_potential(q_rational(g), f);
    FormalPowerTable t = build_table(p, 0.0, 6);
    TransmutationKernel K = kernel_from_function(g, cplx{-1.0}, &ref_rational_n1,
                                                 &ref_rational_n1_dt);
    for (int k = 0; k <= 6; ++k) CHECK(verify_power_mapping(K, t, k) < 1e-6);

    // free case: zero kernel, f = 1
    Grid g1 = make_grid(1.0, 201);
    Potential pz = build_potential(q_zero(g1), {}, cplx{0.0});
    FormalPowerTable tz = build_table(pz, 0.0, 4);
    TransmutationKernel Z = kernel_from_function(
        g1, cplx{0.0}, [](double, double) { return cplx{0.0}; },
        [](double, double) { return cplx{0.0}; });
    for (int k = 0; k <= 4; ++k) CHECK(verify_power_mapping(Z, tz, k) < 1e-12);

    // constant potential with f = cosh
    Grid gc = make_grid(1.0, 401);
    Samples qc = sample(gc, [](double) { return cplx{1.0}; });
    Potential pc = build_potential(qc, {}, cplx{0.0});
    FormalPowerTable tc = build_table(pc, 0.0, 6);
    TransmutationKernel Kc = kernel_from_function(gc, cplx{0.0}, &ref_const_q1,
                                                  &ref_const_q1_dt);
    for (int k = 0; k <= 6; ++k) CHECK(verify_power_mapping(Kc, tc, k) < 1e-6);

    CHECK_THROWS_AS(verify_power_mapping(K, tc, 1), invalid_argument_error);
}

TEST_CASE("base-kernel images of monomials") {
    // With the h = 0 reparametrization of the kernel: odd monomials still map
    // onto phi_k; even monomials map onto phi_k - (h/(k+1)) phi_{k+1}.
    Grid g = make_grid(0.5, 401);
    Samples f = sample(g, [](double x) { return cplx{1.0 / (x + 1.0)}; });
    Potential p = build_potential(q_rational(g), f);
    FormalPowerTable t = build_table(p, 0.0, 7);
    TransmutationKernel K = kernel_from_function(g, cplx{-1.0}, &ref_rational_n1,
                                                 &ref_rational_n1_dt);
    TransmutationKernel base = reparametrize_h(K, cplx{0.0});
    for (int k = 0; k <= 6; ++k) {
        Samples mono = sample(g, [&](double x) { return cplx{std::pow(x, k)}; });
        Samples image = apply_T(base, mono);
        double worst = 0.0;
        for (int i = 0; i < g.n_points; ++i) {
            cplx expect = t.phi[k][i];
            if (k % 2 == 0) expect -= p.h / static_cast<double>(k + 1) * t.phi[k + 1][i];
            worst = std::max(worst, std::abs(image[i] - expect));
        }
        CHECK(worst < 1e-6);
    }
}
