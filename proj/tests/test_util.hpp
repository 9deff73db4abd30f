#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "msplit/bench.hpp"
#include "msplit/tensor.hpp"

namespace msplit::testing {

/// Random unit-diagonal strong M-tensor: A = I_m - C with C > 0 off the
/// diagonal and every mode-1 slice mass in [min_mass, max_mass] (< 1), so
/// rho(C) < 1 by the Collatz bound.
inline Tensor random_strong_m_tensor(std::mt19937& rng, int n, int m,
                                     double min_mass = 0.3, double max_mass = 0.9) {
    std::uniform_real_distribution<double> entry(0.1, 1.0);
    std::uniform_real_distribution<double> mass(min_mass, max_mass);
    Tensor c(m, n);
    for (double& v : c.data()) v = entry(rng);
    for (int i = 0; i < n; ++i) c.majorization_entry(i, i) = 0.0;
    for (int i = 0; i < n; ++i) {
        auto s = c.slice(i);
        const double sum = std::accumulate(s.begin(), s.end(), 0.0);
        const double scale = mass(rng) / sum;
        for (double& v : s) v *= scale;
    }
    Tensor a = identity_tensor(m, n);
    a -= c;
    return a;
}

inline ExampleSystem system_from(const Tensor& a, const Vector& b) {
    ExampleSystem sys;
    sys.a = a;
    sys.b = b;
    auto [an, bn] = normalize_system(a, b);
    sys.a_normalized = std::move(an);
    sys.b_normalized = std::move(bn);
    return sys;
}

/// Brute-force contraction oracle: m-1 nested loops via odometer indices.
inline Vector contract_oracle(const Tensor& a, const Vector& x) {
    const int n = a.dim();
    const int m = a.order();
    Vector y(n, 0.0);
    std::vector<int> idx(m, 0);
    for (int i = 0; i < n; ++i) {
        idx.assign(m, 0);
        idx[0] = i;
        double acc = 0.0;
        while (true) {
            double term = a.at(idx);
            for (int q = 1; q < m; ++q) term *= x[idx[q]];
            acc += term;
            int q = m - 1;
            while (q >= 1 && ++idx[q] == n) {
                idx[q] = 0;
                --q;
            }
            if (q == 0) break;
        }
        y[i] = acc;
    }
    return y;
}

}  // namespace msplit::testing
