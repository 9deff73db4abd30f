#pragma once

#include <string>
#include <vector>

#include "msplit/solver.hpp"
#include "msplit/tensor.hpp"

namespace msplit {

/// The three benchmark systems. id 1 fixes n = 3, id 3 fixes n = 10;
/// id 2 takes n >= 2.
struct ExampleSpec {
    int id = 1;
    int n = 0;  // 0 = the example's default dimension
};

/// A generated system in both raw and unit-diagonal form. Solvers monitor
/// residuals against the raw system so iteration counts are comparable
/// across methods and preconditioners.
struct ExampleSystem {
    Tensor a;
    Vector b;
    Tensor a_normalized;
    Vector b_normalized;
};

ExampleSystem generate_example(const ExampleSpec& spec);

/// Benchmark method vocabulary: the banded-preconditioner families
/// e1f1..e5f5, m1n1..m5n5, sor, psor, plus the baseline preconditioned
/// methods pj-baseline, pgs-baseline (I + S_a) and psor-baseline (I + C_b).
enum class BenchMethod {
    E1F1, E2F2, E3F3, E4F4, E5F5,
    M1N1, M2N2, M3N3, M4N4, M5N5,
    Sor, Psor,
    PjBaseline, PgsBaseline, PsorBaseline,
};

std::string to_string(BenchMethod m);
BenchMethod bench_method_from_string(const std::string& name);
bool bench_method_uses_omega(BenchMethod m);

struct ParamPoint {
    double alpha = 0.0;
    double beta = 0.0;
    int s = 1;
    int k = 1;
    double omega = 1.2;
};

/// Build the preconditioner + splitting a method names and run one solve.
/// Banded families work on the normalized system, baselines on the raw one;
/// residuals are always monitored against (system.a, system.b).
SolveResult solve_with_method(const ExampleSystem& system, BenchMethod method,
                              const ParamPoint& point, const SolveOptions& opts = {});

struct BenchmarkRow {
    std::string method;
    double alpha = 0.0;
    double beta = 0.0;
    int s = 1;
    int k = 1;
    double omega = 0.0;
    bool has_omega = false;
    int iterations = 0;
    double time_s = 0.0;
    bool converged = false;
    std::string status;  // converged | max_iterations | diverged | negative_radicand | error:...
};

/// Run every (grid point, method) combination; per-row failures are captured
/// in the row's status and never abort the sweep. Rows come back in grid
/// order (points outer, methods inner) and repeated runs give identical
/// iteration counts.
std::vector<BenchmarkRow> run_benchmark(const ExampleSystem& system,
                                        const std::vector<BenchMethod>& methods,
                                        const std::vector<ParamPoint>& grid,
                                        const SolveOptions& opts = {});

/// Fixed column order: method,alpha,beta,s,k,omega,iterations,time_s,status.
/// Rows that did not converge report status max_iterations.
std::string render_csv(const std::vector<BenchmarkRow>& rows);

/// One table row per grid point, one column per method; non-converged cells
/// render the paper's dagger.
std::string render_markdown(const std::vector<BenchmarkRow>& rows,
                            const std::vector<std::string>& method_order);

std::string render_json(const std::vector<BenchmarkRow>& rows);

/// Parse "lo:step:hi" (inclusive ends) into a list of values.
std::vector<double> parse_sweep(const std::string& text);

}  // namespace msplit
