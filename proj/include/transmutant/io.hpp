#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "transmutant/formal_powers.hpp"
#include "transmutant/goursat.hpp"
#include "transmutant/grid.hpp"

namespace transmutant {

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

/// Kernel CSV: header x,t,re_K,im_K,re_Kt,im_Kt; row-major over the square;
/// 17 significant digits.
inline void export_kernel_csv(const TransmutationKernel& K, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw invalid_argument_error("cannot open for writing: " + path);
    out << "x,t,re_K,im_K,re_Kt,im_Kt\n";
    const int n = K.grid.n_points;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx k = K.at(i, j), kt = K.dt_at(i, j);
            out << detail::fmt17(K.grid.node(i)) << ',' << detail::fmt17(K.grid.node(j))
                << ',' << detail::fmt17(k.real()) << ',' << detail::fmt17(k.imag()) << ','
                << detail::fmt17(kt.real()) << ',' << detail::fmt17(kt.imag()) << '\n';
        }
}

/// Curve CSV: x,re,im.
inline void export_curve_csv(const Samples& u, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw invalid_argument_error("cannot open for writing: " + path);
    out << "x,re,im\n";
    for (int i = 0; i < u.size(); ++i)
        out << detail::fmt17(u.grid.node(i)) << ',' << detail::fmt17(u[i].real()) << ','
            << detail::fmt17(u[i].imag()) << '\n';
}

/// Formal-power table CSV: x,phi0_re,phi0_im,...,phiK_re,phiK_im.
inline void export_table_csv(const FormalPowerTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw invalid_argument_error("cannot open for writing: " + path);
    out << "x";
    for (int k = 0; k <= t.k_max; ++k) out << ",phi" << k << "_re,phi" << k << "_im";
    out << '\n';
    const Grid& g = t.potential.grid;
    for (int i = 0; i < g.n_points; ++i) {
        out << detail::fmt17(g.node(i));
        for (int k = 0; k <= t.k_max; ++k)
            out << ',' << detail::fmt17(t.phi[k][i].real()) << ','
                << detail::fmt17(t.phi[k][i].imag());
        out << '\n';
    }
}

/// Reads back a curve CSV written by export_curve_csv; the grid is inferred
/// from the x column (uniform, symmetric, odd node count).
inline Samples import_curve_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument_error("cannot open: " + path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> xs;
    std::vector<cplx> vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double x, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &re, &im) != 3)
            throw invalid_argument_error("curve CSV parse error: " + path);
        xs.push_back(x);
        vs.push_back(cplx{re, im});
    }
    int n = static_cast<int>(xs.size());
    if (n < 5 || n % 2 == 0)
        throw invalid_argument_error("curve CSV needs an odd node count >= 5: " + path);
    double a = xs.back();
    Grid g = make_grid(a, n);
    for (int i = 0; i < n; ++i)
        if (std::abs(xs[i] - g.node(i)) > 1e-9)
            throw invalid_argument_error("curve CSV is not on a uniform symmetric grid: " +
                                         path);
    Samples u(g);
    for (int i = 0; i < n; ++i) u[i] = vs[i];
    return u;
}

/// Reads back a kernel CSV written by export_kernel_csv.
inline TransmutationKernel import_kernel_csv(const std::string& path, double a, int n,
                                             cplx h) {
    std::ifstream in(path);
    if (!in) throw invalid_argument_error("cannot open: " + path);
    std::string line;
    std::getline(in, line);  // header
    TransmutationKernel K;
    K.grid = make_grid(a, n);
    K.h = h;
    K.provenance = Provenance::closed_form;
    K.K.resize(static_cast<size_t>(n) * n);
    K.Kt.resize(static_cast<size_t>(n) * n);
    for (size_t idx = 0; idx < K.K.size(); ++idx) {
        if (!std::getline(in, line))
            throw invalid_argument_error("kernel CSV truncated: " + path);
        double x, t, rk, ik, rkt, ikt;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &x, &t, &rk, &ik, &rkt,
                        &ikt) != 6)
            throw invalid_argument_error("kernel CSV parse error: " + path);
        K.K[idx] = cplx{rk, ik};
        K.Kt[idx] = cplx{rkt, ikt};
    }
    return K;
}

} // namespace transmutant
