#include <algorithm>
#include <cmath>

#include "msplit/precondition.hpp"
#include "msplit/solver.hpp"
#include "msplit/spectral.hpp"

namespace msplit {

Classification classify(const Tensor& a, bool with_certificate) {
    const int n = a.dim();
    Classification c;

    // Z-tensor test: every off-diagonal entry <= 0.
    Tensor off = a;
    for (int i = 0; i < n; ++i) off.majorization_entry(i, i) = 0.0;
    c.is_z = std::all_of(off.data().begin(), off.data().end(),
                         [](double v) { return v <= 0.0; });
    if (!c.is_z) {
        c.reason = "not a Z-tensor: a positive off-diagonal entry exists";
        return c;
    }

    c.eta = a.majorization_entry(0, 0);
    for (int i = 1; i < n; ++i) c.eta = std::max(c.eta, a.majorization_entry(i, i));

    // B = eta I - A is nonnegative by construction for a Z-tensor.
    Tensor b = a;
    b *= -1.0;
    for (int i = 0; i < n; ++i) b.majorization_entry(i, i) += c.eta;
    for (double& v : b.data()) v = std::max(v, 0.0);  // clear -0.0 / rounding dust

    const SpectralEstimate est = spectral_radius(b, 1e-10, 50000);
    c.rho_b = est.rho;
    c.rho_lower = est.lower;
    c.rho_upper = est.upper;
    c.is_strong_m = c.eta > 0.0 && est.rho < c.eta;
    if (!c.is_strong_m)
        c.reason = c.eta > 0.0 ? "rho(eta I - A) >= eta" : "non-positive diagonal";

    if (with_certificate && c.is_strong_m) {
        const SplitPair gs = make_classical_splitting(a, ClassicalKind::GaussSeidel);
        SolveOptions opts;
        opts.tol = 1e-10;
        opts.max_iter = 1000;
        const Vector ones(n, 1.0);
        const SolveResult res = solve(gs, ones, a, ones, opts);
        if (res.report.status == SolveStatus::Converged &&
            std::all_of(res.x.begin(), res.x.end(), [](double v) { return v > 0.0; }))
            c.positive_certificate = res.x;
    }
    return c;
}

}  // namespace msplit
