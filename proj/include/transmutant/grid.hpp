#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "transmutant/errors.hpp"

namespace transmutant {

using cplx = std::complex<double>;

/// Symmetric uniform grid on [-a, a] with the origin as a node.
struct Grid {
    double a = 0.0;
    int n_points = 0;
    double spacing = 0.0;

    double node(int i) const { return -a + i * spacing; }
    int origin_index() const { return (n_points - 1) / 2; }

    /// Index of the node equal to x, or -1 if x is not a node.
    int index_of(double x) const {
        double pos = (x + a) / spacing;
        int i = static_cast<int>(std::lround(pos));
        if (i < 0 || i >= n_points) return -1;
        if (std::abs(pos - i) > 1e-9) return -1;
        return i;
    }

    bool operator==(const Grid& other) const {
        return a == other.a && n_points == other.n_points;
    }
};

inline Grid make_grid(double a, int n_points) {
    if (!(a > 0.0))
        throw invalid_argument_error("make_grid: half-width must be positive");
    if (n_points < 5 || n_points % 2 == 0)
        throw invalid_argument_error("make_grid: n_points must be odd and >= 5");
    return Grid{a, n_points, 2.0 * a / (n_points - 1)};
}

/// Sampled function on a Grid.
struct Samples {
    Grid grid;
    std::vector<cplx> values;

    Samples() = default;
    explicit Samples(const Grid& g) : grid(g), values(g.n_points, cplx{}) {}
    Samples(const Grid& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != g.n_points)
            throw invalid_argument_error("Samples: length mismatch");
    }

    cplx& operator[](int i) { return values[i]; }
    const cplx& operator[](int i) const { return values[i]; }
    int size() const { return grid.n_points; }
};

inline Samples sample(const Grid& g, const std::function<cplx(double)>& f) {
    Samples s(g);
    for (int i = 0; i < g.n_points; ++i) s[i] = f(g.node(i));
    return s;
}

inline double max_abs(const Samples& u) {
    double m = 0.0;
    for (const auto& v : u.values) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs_diff(const Samples& u, const Samples& v) {
    double m = 0.0;
    for (int i = 0; i < u.size(); ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

namespace detail {

// Cumulative integral of v[0..count-1] with F[0] = 0, marching away from the
// start node. Composite Simpson reaches even indices, a 3/8 end rule reaches
// odd ones; the first interval uses the 4-point open-end formula. The layout is
// strided so the same routine serves rows and columns of 2D fields.
template <typename At, typename Out>
void cumulative_march(At v, Out F, int count, double h) {
    if (count <= 0) return;
    F(0) = cplx{0.0};
    if (count == 1) return;
    if (count == 2) {  // trapezoid is the only choice on two nodes
        F(1) = h / 2.0 * (v(0) + v(1));
        return;
    }
    if (count == 3) {
        F(1) = h / 12.0 * (5.0 * v(0) + 8.0 * v(1) - v(2));
        F(2) = h / 3.0 * (v(0) + 4.0 * v(1) + v(2));
        return;
    }
    F(1) = h / 24.0 * (9.0 * v(0) + 19.0 * v(1) - 5.0 * v(2) + v(3));
    for (int i = 2; i < count; i += 2)
        F(i) = F(i - 2) + h / 3.0 * (v(i - 2) + 4.0 * v(i - 1) + v(i));
    for (int i = 3; i < count; i += 2)
        F(i) = F(i - 3) + 3.0 * h / 8.0 * (v(i - 3) + 3.0 * v(i - 2) + 3.0 * v(i - 1) + v(i));
}

// Composite Simpson over an even number of whole sub-intervals.
template <typename At>
cplx simpson_even(At v, int count_intervals, double h) {
    cplx acc{0.0};
    for (int i = 0; i + 2 <= count_intervals; i += 2)
        acc += v(i) + 4.0 * v(i + 1) + v(i + 2);
    return acc * (h / 3.0);
}

} // namespace detail

/// F(x_i) = int_{x0}^{x_i} u(s) ds, fourth order on uniform nodes; F(x0) = 0 exactly.
inline Samples cumulative_integral(const Samples& u, double x0) {
    int i0 = u.grid.index_of(x0);
    if (i0 < 0)
        throw invalid_argument_error("cumulative_integral: x0 is not a grid node");
    Samples F(u.grid);
    const double h = u.grid.spacing;
    // rightward
    detail::cumulative_march([&](int k) { return u[i0 + k]; },
                             [&](int k) -> cplx& { return F[i0 + k]; },
                             u.size() - i0, h);
    // leftward, mirrored and negated
    std::vector<cplx> left(i0 + 1);
    detail::cumulative_march([&](int k) { return u[i0 - k]; },
                             [&](int k) -> cplx& { return left[k]; },
                             i0 + 1, h);
    for (int k = 1; k <= i0; ++k) F[i0 - k] = -left[k];
    return F;
}

/// Local 4-point cubic interpolation; exact at nodes and for cubic polynomials.
inline cplx interpolate(const Samples& u, double x) {
    const Grid& g = u.grid;
    if (std::abs(x) > g.a * (1.0 + 1e-12))
        throw out_of_domain_error("interpolate: |x| > a");
    x = std::clamp(x, -g.a, g.a);
    double pos = (x + g.a) / g.spacing;
    int near = static_cast<int>(std::lround(pos));
    if (std::abs(pos - near) < 1e-12) return u[near];
    int j = static_cast<int>(std::floor(pos));
    int base = std::clamp(j - 1, 0, g.n_points - 4);
    double s = pos - base;  // in units of spacing, relative to stencil start
    // Lagrange weights on nodes {0,1,2,3}
    double w0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    double w1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    double w2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    double w3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    return w0 * u[base] + w1 * u[base + 1] + w2 * u[base + 2] + w3 * u[base + 3];
}

/// Centered second differences, one-sided second-order formulas at the ends.
inline Samples second_derivative(const Samples& u) {
    int n = u.size();
    if (n < 5)
        throw invalid_argument_error("second_derivative: need n_points >= 5");
    const double h2 = u.grid.spacing * u.grid.spacing;
    Samples d(u.grid);
    for (int i = 1; i + 1 < n; ++i)
        d[i] = (u[i - 1] - 2.0 * u[i] + u[i + 1]) / h2;
    d[0] = (2.0 * u[0] - 5.0 * u[1] + 4.0 * u[2] - u[3]) / h2;
    d[n - 1] = (2.0 * u[n - 1] - 5.0 * u[n - 2] + 4.0 * u[n - 3] - u[n - 4]) / h2;
    return d;
}

/// Fourth-order first derivative: 5-point central stencil, one-sided at the ends.
inline Samples derivative(const Samples& u) {
    int n = u.size();
    if (n < 5)
        throw invalid_argument_error("derivative: need n_points >= 5");
    const double h = u.grid.spacing;
    Samples d(u.grid);
    for (int i = 2; i + 2 < n; ++i)
        d[i] = (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]) / (12.0 * h);
    auto edge = [&](int i0, int sgn) {
        auto at = [&](int k) { return u[i0 + sgn * k]; };
        d[i0] = static_cast<double>(sgn) / (12.0 * h) *
                (-25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) - 3.0 * at(4));
        d[i0 + sgn] = static_cast<double>(sgn) / (12.0 * h) *
                      (-3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4));
    };
    edge(0, 1);
    edge(n - 1, -1);
    return d;
}

/// Fourth-order one-sided derivative at the origin node, marching rightward.
inline cplx derivative_at_origin(const Samples& u) {
    int c = u.grid.origin_index();
    const double h = u.grid.spacing;
    if (u.size() - c >= 5)
        return (-25.0 * u[c] + 48.0 * u[c + 1] - 36.0 * u[c + 2] + 16.0 * u[c + 3] -
                3.0 * u[c + 4]) /
               (12.0 * h);
    return (u[c + 1] - u[c - 1]) / (2.0 * h);
}

} // namespace transmutant
