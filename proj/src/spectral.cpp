#include "msplit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace msplit {

namespace {

bool has_zero_slice(const Tensor& t) {
    for (int i = 0; i < t.dim(); ++i) {
        auto s = t.slice(i);
        if (std::all_of(s.begin(), s.end(), [](double v) { return v == 0.0; })) return true;
    }
    return false;
}

SpectralEstimate run_power_iteration(const Tensor& t, double tol, int max_iter) {
    const int n = t.dim();
    const int p = t.order() - 1;

    SpectralEstimate est;
    Vector x(n, 1.0);
    for (int it = 1; it <= max_iter; ++it) {
        const Vector y = contract(t, x);
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (int i = 0; i < n; ++i) {
            if (x[i] <= 0.0) continue;
            double xp = 1.0;
            for (int q = 0; q < p; ++q) xp *= x[i];
            const double ratio = y[i] / xp;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        est.iterations = it;
        if (hi == 0.0) {
            // Nothing feeds back into the positive cone: the radius is zero.
            est.lower = est.upper = est.rho = 0.0;
            est.converged = true;
            est.perron = x;
            return est;
        }
        est.lower = lo;
        est.upper = hi;
        est.rho = 0.5 * (lo + hi);
        est.perron = x;
        if ((hi - lo) / hi < tol) {
            est.converged = true;
            return est;
        }
        Vector next = elementwise_root(y, t.order());
        const double mx = *std::max_element(next.begin(), next.end());
        if (mx <= 0.0) {
            est.lower = est.upper = est.rho = 0.0;
            est.converged = true;
            return est;
        }
        for (double& v : next) v /= mx;
        x = std::move(next);
    }
    return est;
}

}  // namespace

SpectralEstimate spectral_radius(const Tensor& t, double tol, int max_iter) {
    const double max_entry = t.max_abs();
    // Entries below -1e-13 * max are genuinely negative; anything closer to
    // zero is rounding dust from upstream triangular solves and is clamped.
    const double dust = 1e-13 * max_entry;
    bool any_dust = false;
    for (double v : t.data()) {
        if (v < -dust) throw NotNonnegativeError("spectral_radius needs a nonnegative tensor");
        if (v < 0.0) any_dust = true;
    }

    if (max_entry == 0.0) {
        SpectralEstimate est;
        est.converged = true;
        est.perron.assign(t.dim(), 1.0);
        return est;
    }

    Tensor work = t;
    if (any_dust)
        for (double& v : work.data()) v = std::max(v, 0.0);

    const double eps = 1e-12 * max_entry;
    auto shifted_copy = [&] {
        Tensor s = work;
        for (double& v : s.data()) v += eps;
        return s;
    };

    if (has_zero_slice(work)) {
        SpectralEstimate est = run_power_iteration(shifted_copy(), tol, max_iter);
        est.shifted = true;
        est.shift_epsilon = eps;
        return est;
    }

    SpectralEstimate est = run_power_iteration(work, tol, max_iter);
    if (!est.converged) {
        // Reducible-adjacent case: retry on the strictly positive shift.
        SpectralEstimate retry = run_power_iteration(shifted_copy(), tol, max_iter);
        retry.shifted = true;
        retry.shift_epsilon = eps;
        retry.iterations += est.iterations;
        return retry;
    }
    return est;
}

RhoOrdering compare_rho(const SplitPair& a, const SplitPair& b, double tol) {
    const Tensor ta = iteration_tensor(a);
    const Tensor tb = iteration_tensor(b);
    const double ra = spectral_radius(ta).rho;
    const double rb = spectral_radius(tb).rho;
    if (std::abs(ra - rb) < tol) return RhoOrdering::Indistinguishable;
    return ra < rb ? RhoOrdering::LessOrEqual : RhoOrdering::GreaterOrEqual;
}

bool is_irreducible(const Matrix& m) {
    const int n = m.dim();
    if (n == 1) return true;
    auto reaches_all = [&](bool transpose) {
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (seen[w] || w == v) continue;
                const double e = transpose ? m(w, v) : m(v, w);
                if (e != 0.0) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };
    return reaches_all(false) && reaches_all(true);
}

bool majorization_irreducible(const Tensor& a) { return is_irreducible(majorization(a)); }

}  // namespace msplit
