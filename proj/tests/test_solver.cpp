#include <cmath>
#include <random>

#include "doctest.h"
#include "msplit/solver.hpp"
#include "test_util.hpp"

using namespace msplit;
using msplit::testing::random_strong_m_tensor;
using msplit::testing::system_from;

namespace {
const ExampleSystem& example1() {
    static const ExampleSystem sys = generate_example({1, 0});
    return sys;
}
}  // namespace

TEST_CASE("identity system converges in one update") {
    const Tensor a = identity_tensor(3, 4);
    const Vector b(4, 1.0);
    const SplitPair jac = make_classical_splitting(a, ClassicalKind::Jacobi);
    const SolveResult res = solve(jac, b, a, b);
    CHECK(res.report.status == SolveStatus::Converged);
    CHECK(res.report.iterations == 1);
    for (double v : res.x) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("residual history bookkeeping") {
    const auto& sys = example1();
    const SplitPair jac = make_classical_splitting(sys.a_normalized, ClassicalKind::Jacobi);
    const SolveResult res = solve(jac, sys.b_normalized, sys.a, sys.b);
    REQUIRE(res.report.status == SolveStatus::Converged);
    CHECK(res.report.residual_history.size() ==
          static_cast<std::size_t>(res.report.iterations) + 1);
    CHECK(res.report.residual_history.back() < 1e-12);
    CHECK(res.report.residual_history.front() == doctest::Approx(std::sqrt(3.0)));
    // Deterministic count for the printed 3x3x3 system (local rate ~0.386).
    CHECK(res.report.iterations >= 28);
    CHECK(res.report.iterations <= 32);
}

TEST_CASE("Jacobi, Gauss-Seidel and SOR share the fixed point") {
    const auto& sys = example1();
    SolveOptions opts;
    const SolveResult j = solve_with_method(sys, BenchMethod::E2F2, {0, 0, 1, 1, 1.2}, opts);
    const SolveResult g = solve_with_method(sys, BenchMethod::M1N1, {0, 0, 1, 1, 1.2}, opts);
    const SolveResult s = solve_with_method(sys, BenchMethod::Sor, {0, 0, 1, 1, 1.2}, opts);
    REQUIRE(j.report.status == SolveStatus::Converged);
    REQUIRE(g.report.status == SolveStatus::Converged);
    REQUIRE(s.report.status == SolveStatus::Converged);
    for (int i = 0; i < 3; ++i) {
        CHECK(j.x[i] == doctest::Approx(g.x[i]).epsilon(1e-8));
        CHECK(j.x[i] == doctest::Approx(s.x[i]).epsilon(1e-8));
        CHECK(j.x[i] > 0.0);
    }
}

TEST_CASE("residuals decrease after a short transient") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        const Tensor a = random_strong_m_tensor(rng, 5, 3);
        const ExampleSystem sys = system_from(a, Vector(5, 1.0));
        SolveOptions opts;
        const SolveResult res =
            solve_with_method(sys, BenchMethod::M1N1, {0, 0, 1, 1, 1.0}, opts);
        REQUIRE(res.report.status == SolveStatus::Converged);
        const auto& h = res.report.residual_history;
        for (std::size_t j = 3; j + 1 < h.size(); ++j)
            CHECK(h[j + 1] <= h[j] * (1.0 + 1e-12));
        for (double v : res.x) CHECK(v > 0.0);
    }
}

TEST_CASE("divergence guard trips on an expanding splitting") {
    // I - C with slice mass > 1 is not a strong M-tensor; Jacobi expands.
    std::mt19937 rng(73);
    const Tensor a = random_strong_m_tensor(rng, 4, 3, 2.5, 3.0);
    const ExampleSystem sys = system_from(a, Vector(4, 1.0));
    SolveOptions opts;
    const SolveResult res =
        solve_with_method(sys, BenchMethod::E2F2, {0, 0, 1, 1, 1.0}, opts);
    CHECK(res.report.status == SolveStatus::Diverged);
    CHECK(res.report.iterations < 2000);
}

TEST_CASE("negative radicand ends the run with its own status") {
    // E = I, F = -2 I_m: the second update hits an even root of a negative value.
    const int n = 3;
    SplitPair pair;
    pair.e_matrix = Matrix::identity(n);
    pair.f_tensor = identity_tensor(3, n);
    pair.f_tensor *= -2.0;
    pair.preconditioned_tensor = matrix_tensor_product(pair.e_matrix, identity_tensor(3, n));
    pair.preconditioned_tensor -= pair.f_tensor;
    const Vector b(n, 1.0);
    const SolveResult res = solve(pair, b, pair.preconditioned_tensor, b);
    CHECK(res.report.status == SolveStatus::NegativeRadicand);
    CHECK(res.report.residual_history.size() ==
          static_cast<std::size_t>(res.report.iterations) + 1);
}

TEST_CASE("an x0 at the solution needs zero iterations") {
    const Tensor a = identity_tensor(3, 3);
    const Vector b(3, 1.0);
    const SplitPair jac = make_classical_splitting(a, ClassicalKind::Jacobi);
    SolveOptions opts;
    opts.x0 = Vector(3, 1.0);
    const SolveResult res = solve(jac, b, a, b, opts);
    CHECK(res.report.status == SolveStatus::Converged);
    CHECK(res.report.iterations == 0);
}

TEST_CASE("option and dimension validation") {
    const auto& sys = example1();
    const SplitPair jac = make_classical_splitting(sys.a_normalized, ClassicalKind::Jacobi);
    SolveOptions bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(solve(jac, sys.b_normalized, sys.a, sys.b, bad), ConfigError);
    CHECK_THROWS_AS(solve(jac, Vector(4, 1.0), sys.a, sys.b), DimensionError);
    SolveOptions wrong_x0;
    wrong_x0.x0 = Vector(5, 0.0);
    CHECK_THROWS_AS(solve(jac, sys.b_normalized, sys.a, sys.b, wrong_x0), DimensionError);
}

TEST_CASE("status strings") {
    CHECK(to_string(SolveStatus::Converged) == "converged");
    CHECK(to_string(SolveStatus::MaxIterations) == "max_iterations");
    CHECK(to_string(SolveStatus::Diverged) == "diverged");
    CHECK(to_string(SolveStatus::NegativeRadicand) == "negative_radicand");
}
