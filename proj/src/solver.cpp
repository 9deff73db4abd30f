#include "msplit/solver.hpp"

#include <chrono>
#include <cmath>

#include "msplit/lu.hpp"

namespace msplit {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::MaxIterations: return "max_iterations";
        case SolveStatus::Diverged: return "diverged";
        case SolveStatus::NegativeRadicand: return "negative_radicand";
    }
    return "max_iterations";
}

SolveResult solve(const SplitPair& split, const Vector& rhs, const Tensor& monitor_a,
                  const Vector& monitor_b, const SolveOptions& opts) {
    const int n = split.e_matrix.dim();
    const int m = split.f_tensor.order();
    if (split.f_tensor.dim() != n) throw DimensionError("solve: inconsistent split pair");
    if (static_cast<int>(rhs.size()) != n || static_cast<int>(monitor_b.size()) != monitor_a.dim())
        throw DimensionError("solve: right-hand side dimension mismatch");
    if (monitor_a.dim() != n || monitor_a.order() != m)
        throw DimensionError("solve: monitor system shape mismatch");
    if (!(opts.tol > 0.0) || opts.max_iter < 1)
        throw ConfigError("solve: tol must be > 0 and max_iter >= 1");

    const auto start = std::chrono::steady_clock::now();
    const LuFactorization lu = LuFactorization::compute(split.e_matrix);

    Vector x = opts.x0;
    if (x.empty()) x.assign(n, 0.0);
    if (static_cast<int>(x.size()) != n) throw DimensionError("solve: x0 dimension mismatch");

    auto residual = [&](const Vector& xi) {
        Vector r = contract(monitor_a, xi);
        for (int i = 0; i < n; ++i) r[i] = monitor_b[i] - r[i];
        return norm2(r);
    };

    SolveResult result;
    SolveReport& rep = result.report;
    const double r0 = residual(x);
    rep.residual_history.push_back(r0);

    if (r0 < opts.tol) {
        rep.status = SolveStatus::Converged;
    } else {
        for (int j = 1; j <= opts.max_iter; ++j) {
            Vector y = contract(split.f_tensor, x);
            for (int i = 0; i < n; ++i) y[i] += rhs[i];
            const Vector z = lu.solve(y);
            try {
                x = elementwise_root(z, m);
            } catch (const NegativeRadicandError&) {
                rep.status = SolveStatus::NegativeRadicand;
                rep.iterations = j - 1;
                break;
            }
            const double r = residual(x);
            rep.residual_history.push_back(r);
            rep.iterations = j;
            if (r < opts.tol) {
                rep.status = SolveStatus::Converged;
                break;
            }
            if (!std::isfinite(r) || r > 1e8 * r0) {
                rep.status = SolveStatus::Diverged;
                break;
            }
            rep.status = SolveStatus::MaxIterations;
        }
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.x = std::move(x);
    return result;
}

}  // namespace msplit
