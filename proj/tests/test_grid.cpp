#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "transmutant/grid.hpp"

using namespace transmutant;

TEST_CASE("make_grid node layout") {
    Grid g = make_grid(1.0, 5);
    REQUIRE(g.spacing == Catch::Approx(0.5));
    std::vector<double> expect{-1.0, -0.5, 0.0, 0.5, 1.0};
    for (int i = 0; i < 5; ++i) CHECK(g.node(i) == Catch::Approx(expect[i]));
    CHECK(g.origin_index() == 2);

    Grid g2 = make_grid(0.5, 5);
    CHECK(g2.node(1) == Catch::Approx(-0.25));

    CHECK_THROWS_AS(make_grid(1.0, 4), invalid_argument_error);
    CHECK_THROWS_AS(make_grid(-1.0, 5), invalid_argument_error);
    CHECK_THROWS_AS(make_grid(1.0, 3), invalid_argument_error);
}

TEST_CASE("grid symmetry invariant") {
    Grid g = make_grid(2.5, 41);
    for (int i = 0; i < g.n_points; ++i)
        CHECK(g.node(i) == Catch::Approx(-g.node(g.n_points - 1 - i)).margin(1e-15));
}

TEST_CASE("cumulative_integral basics") {
    Grid g = make_grid(1.0, 101);
    Samples one = sample(g, [](double) { return cplx{1.0}; });
    Samples F = cumulative_integral(one, 0.0);
    for (int i = 0; i < g.n_points; ++i)
        CHECK(std::abs(F[i] - g.node(i)) < 1e-13);

    Samples lin = sample(g, [](double x) { return cplx{x}; });
    Samples Flin = cumulative_integral(lin, 0.0);
    CHECK(std::abs(Flin[g.n_points - 1] - 0.5) < 1e-12);

    CHECK_THROWS_AS(cumulative_integral(one, 0.123), invalid_argument_error);
}

TEST_CASE("cumulative_integral analytic oracle") {
    Grid g = make_grid(1.0, 201);
    Samples u = sample(g, [](double x) { return cplx{std::cos(x)}; });
    Samples F = cumulative_integral(u, 0.0);
    for (int i = 0; i < g.n_points; ++i)
        CHECK(std::abs(F[i] - std::sin(g.node(i))) < 1e-9);
    CHECK(std::abs(F[g.n_points - 1] - 0.8414709848078965) < 1e-9);
}

TEST_CASE("cumulative_integral is linear") {
    Grid g = make_grid(1.0, 51);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Samples u(g), v(g);
    for (int i = 0; i < g.n_points; ++i) {
        u[i] = cplx{dist(rng), dist(rng)};
        v[i] = cplx{dist(rng), dist(rng)};
    }
    cplx alpha{0.7, -0.2}, beta{-1.3, 0.4};
    Samples w(g);
    for (int i = 0; i < g.n_points; ++i) w[i] = alpha * u[i] + beta * v[i];
    Samples Fw = cumulative_integral(w, 0.0);
    Samples Fu = cumulative_integral(u, 0.0);
    Samples Fv = cumulative_integral(v, 0.0);
    for (int i = 0; i < g.n_points; ++i)
        CHECK(std::abs(Fw[i] - (alpha * Fu[i] + beta * Fv[i])) < 1e-13);
}

TEST_CASE("cumulative_integral parity from origin") {
    Grid g = make_grid(1.0, 81);
    Samples odd = sample(g, [](double x) { return cplx{x * x * x - 0.3 * x}; });
    Samples F = cumulative_integral(odd, 0.0);
    int n = g.n_points;
    for (int i = 0; i < n; ++i)
        CHECK(std::abs(F[i] - F[n - 1 - i]) < 1e-14);  // even output

    Samples even = sample(g, [](double x) { return cplx{std::cos(3.0 * x)}; });
    Samples G = cumulative_integral(even, 0.0);
    for (int i = 0; i < n; ++i)
        CHECK(std::abs(G[i] + G[n - 1 - i]) < 1e-14);  // odd output
}

TEST_CASE("interpolate cubic reproduction") {
    Grid g = make_grid(1.0, 101);
    Samples cube = sample(g, [](double x) { return cplx{x * x * x}; });
    CHECK(std::abs(interpolate(cube, 0.123) - cplx{0.123 * 0.123 * 0.123}) < 1e-14);

    Samples five = sample(g, [](double) { return cplx{5.0}; });
    CHECK(std::abs(interpolate(five, 0.777) - cplx{5.0}) < 1e-13);

    // exact at nodes
    CHECK(interpolate(cube, g.node(17)) == cube[17]);

    CHECK_THROWS_AS(interpolate(cube, 1.5), out_of_domain_error);
}

TEST_CASE("interpolate analytic oracle") {
    Grid g = make_grid(1.0, 201);
    Samples s = sample(g, [](double x) { return cplx{std::sin(x)}; });
    CHECK(std::abs(interpolate(s, 0.3) - std::sin(0.3)) < 1e-8);
    CHECK(std::abs(interpolate(s, -0.9987) - std::sin(-0.9987)) < 1e-8);
}

TEST_CASE("second_derivative") {
    Grid g = make_grid(1.0, 101);
    Samples sq = sample(g, [](double x) { return cplx{x * x}; });
    Samples d = second_derivative(sq);
    for (int i = 1; i + 1 < g.n_points; ++i) CHECK(std::abs(d[i] - 2.0) < 1e-10);

    Samples c = sample(g, [](double) { return cplx{3.5}; });
    Samples dc = second_derivative(c);
    for (int i = 0; i < g.n_points; ++i) CHECK(std::abs(dc[i]) < 1e-11);

    Grid g4 = make_grid(1.0, 401);
    Samples cs = sample(g4, [](double x) { return cplx{std::cos(x)}; });
    Samples dcs = second_derivative(cs);
    for (int i = 1; i + 1 < g4.n_points; ++i)
        CHECK(std::abs(dcs[i] + std::cos(g4.node(i))) < 5e-5);
}

TEST_CASE("double cumulative then second derivative recovers input") {
    Grid g = make_grid(1.0, 201);
    Samples u = sample(g, [](double x) { return cplx{std::exp(x) * std::sin(2.0 * x)}; });
    Samples F = cumulative_integral(cumulative_integral(u, 0.0), 0.0);
    Samples rec = second_derivative(F);
    double tol = 10.0 * g.spacing * g.spacing;
    for (int i = 1; i + 1 < g.n_points; ++i)
        CHECK(std::abs(rec[i] - u[i]) < tol);
}

TEST_CASE("derivative fourth order") {
    Grid g = make_grid(1.0, 101);
    Samples s = sample(g, [](double x) { return cplx{std::sin(3.0 * x)}; });
    Samples d = derivative(s);
    for (int i = 0; i < g.n_points; ++i)
        CHECK(std::abs(d[i] - 3.0 * std::cos(3.0 * g.node(i))) < 2e-5);
}
