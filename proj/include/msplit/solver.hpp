#pragma once

#include <string>
#include <vector>

#include "msplit/splitting.hpp"
#include "msplit/tensor.hpp"

namespace msplit {

enum class SolveStatus { Converged, MaxIterations, Diverged, NegativeRadicand };

std::string to_string(SolveStatus s);

struct SolveOptions {
    double tol = 1e-12;
    int max_iter = 2000;
    Vector x0;  // empty = zero vector
};

struct SolveReport {
    SolveStatus status = SolveStatus::MaxIterations;
    int iterations = 0;
    std::vector<double> residual_history;  // residual_history[j] = ||r(x_j)||, length iterations+1
    double elapsed_seconds = 0.0;
};

struct SolveResult {
    Vector x;
    SolveReport report;
};

/// Run the fixed-point iteration
///     x_{j+1} = [ M(E)^{-1} (F x_j^{m-1} + rhs) ]^{[1/(m-1)]}
/// on a splitting pair.
///
/// `rhs` is the right-hand side of the system the pair splits (the
/// preconditioned right-hand side P b for preconditioned splittings).
/// Residuals are always measured against the original system
/// (monitor_a, monitor_b), so iteration counts stay comparable across
/// preconditioners. Iterations count completed updates: x0 -> x1 is
/// iteration 1.
///
/// Stops when ||r_j|| < tol (Converged), j = max_iter (MaxIterations), or
/// ||r_j|| grows past 1e8 ||r_0|| or turns non-finite (Diverged). A negative
/// radicand under an even-order root ends the run with NegativeRadicand.
SolveResult solve(const SplitPair& split, const Vector& rhs, const Tensor& monitor_a,
                  const Vector& monitor_b, const SolveOptions& opts = {});

}  // namespace msplit
