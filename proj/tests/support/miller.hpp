#pragma once

// Test-only oracle: modified Bessel I_n by Miller's descending recurrence,
// normalized with e^z = I_0(z) + 2 sum_{k>=1} I_k(z). Independent of the
// ascending-series implementation it cross-checks.

#include <cmath>
#include <vector>

namespace test_support {

inline double miller_bessel_I(int n, double z) {
    if (z == 0.0) return n == 0 ? 1.0 : 0.0;
    const int start = 60 + static_cast<int>(2.0 * std::abs(z));
    std::vector<double> I(start + 2, 0.0);
    I[start + 1] = 0.0;
    I[start] = 1e-300;
    for (int k = start; k >= 1; --k)
        I[k - 1] = I[k + 1] + (2.0 * k / z) * I[k];
    double norm = I[0];
    for (int k = 1; k <= start; ++k) norm += 2.0 * I[k];
    double scale = std::exp(z) / norm;
    return I[n] * scale;
}

} // namespace test_support
