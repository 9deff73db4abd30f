#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "msplit/lu.hpp"
#include "msplit/spectral.hpp"
#include "msplit/splitting.hpp"
#include "test_util.hpp"

using namespace msplit;
using msplit::testing::random_strong_m_tensor;

namespace {

const Tensor& example1() {
    static const Tensor a = generate_example({1, 0}).a_normalized;
    return a;
}

Vector inverse_diagonal(const Matrix& m) {
    const LuFactorization lu = LuFactorization::compute(m);
    Vector diag(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        Vector e(m.dim(), 0.0);
        e[i] = 1.0;
        diag[i] = lu.solve(e)[i];
    }
    return diag;
}

constexpr std::array<SplittingFamily, 11> kBandedFamilies = {
    SplittingFamily::JacobiE1,      SplittingFamily::JacobiE2,
    SplittingFamily::JacobiE5,      SplittingFamily::GaussSeidelM1,
    SplittingFamily::GaussSeidelM2, SplittingFamily::GaussSeidelM5,
    SplittingFamily::PrecondSor,    SplittingFamily::JacobiE3,
    SplittingFamily::GaussSeidelM3, SplittingFamily::JacobiE4,
    SplittingFamily::GaussSeidelM4};

PreconditionerSpec spec_for(SplittingFamily f, double alpha, double beta, int s, int k,
                            int n) {
    switch (f) {
        case SplittingFamily::JacobiE3:
        case SplittingFamily::GaussSeidelM3:
            return PreconditionerSpec::upper_only(alpha, s, n);
        case SplittingFamily::JacobiE4:
        case SplittingFamily::GaussSeidelM4:
            return PreconditionerSpec::lower_only(beta, k, n);
        default:
            return PreconditionerSpec::full_band(alpha, beta, s, k, n);
    }
}

}  // namespace

TEST_CASE("e2f2 with zero parameters is the plain Jacobi splitting") {
    const SplitPair pair =
        make_splitting(example1(), PreconditionerSpec::full_band(0, 0, 1, 1, 3),
                       {SplittingFamily::JacobiE2, 1.0});
    CHECK(pair.e_matrix.data() == Matrix::identity(3).data());
    // F = L I + F_A = I_m - A for a unit-diagonal tensor.
    Tensor want = identity_tensor(3, 3);
    want -= example1();
    CHECK(max_abs_diff(pair.f_tensor, want) <= 1e-15);
}

TEST_CASE("fifth Jacobi splitting matches the closed-form inverse diagonal") {
    const SplitPair pair =
        make_splitting(example1(), PreconditionerSpec::full_band(1, 1, 1, 1, 3),
                       {SplittingFamily::JacobiE5, 1.0});
    const Matrix maj = majorization(example1());
    const Vector inv = inverse_diagonal(pair.e_matrix);
    // 1/(1 - a_1 a_{122} a_{211}) for the first row, both bands in between.
    CHECK(inv[0] == doctest::Approx(1.0 / (1.0 - 0.0014)).epsilon(1e-12));
    for (int i = 0; i < 3; ++i) {
        double expect = 1.0;
        if (i + 1 < 3) expect -= maj(i, i + 1) * maj(i + 1, i);
        if (i - 1 >= 0) expect -= maj(i, i - 1) * maj(i - 1, i);
        CHECK(inv[i] == doctest::Approx(1.0 / expect).epsilon(1e-12));
    }
}

TEST_CASE("SOR at omega 1 equals the first Gauss-Seidel splitting with P = I") {
    const SplitPair sor = make_splitting(example1(), {}, {SplittingFamily::Sor, 1.0});
    const SplitPair gs =
        make_splitting(example1(), PreconditionerSpec::full_band(0, 0, 1, 1, 3),
                       {SplittingFamily::GaussSeidelM1, 1.0});
    CHECK(sor.e_matrix.data() == gs.e_matrix.data());
    CHECK(max_abs_diff(sor.f_tensor, gs.f_tensor) == 0.0);
}

TEST_CASE("every splitting family reconstructs the preconditioned tensor") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 4;
        const Tensor a = random_strong_m_tensor(rng, n, 3);
        const double alpha = u(rng), beta = u(rng);
        for (const SplittingFamily f : kBandedFamilies) {
            const SplitPair pair = make_splitting(
                a, spec_for(f, alpha, beta, 1, 1, n), {f, 0.9});
            Tensor recon = matrix_tensor_product(pair.e_matrix, identity_tensor(3, n));
            recon -= pair.f_tensor;
            CHECK(max_abs_diff(recon, pair.preconditioned_tensor) <= 1e-12);
        }
        const SplitPair sor = make_splitting(a, {}, {SplittingFamily::Sor, 0.9});
        Tensor recon = matrix_tensor_product(sor.e_matrix, identity_tensor(3, n));
        recon -= sor.f_tensor;
        CHECK(max_abs_diff(recon, a) <= 1e-12);
    }
}

TEST_CASE("regular structure of the second Jacobi splitting") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const Tensor a = random_strong_m_tensor(rng, 5, 3);
        const SplitPair pair = make_splitting(
            a, PreconditionerSpec::full_band(u(rng), u(rng), 1, 1, 5),
            {SplittingFamily::JacobiE2, 1.0});
        for (double v : pair.f_tensor.data()) CHECK(v >= -1e-15);
        CHECK(pair.e_matrix.data() == Matrix::identity(5).data());
    }
}

TEST_CASE("second Gauss-Seidel assembly matches the piecewise diagonal formula") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + trial % 3;
        const Tensor a = random_strong_m_tensor(rng, n, 3);
        const Matrix maj = majorization(a);
        const int kk = 1 + trial % 2;
        const double alpha = u(rng), beta = u(rng);
        const SplitPair pair = make_splitting(
            a, PreconditionerSpec::full_band(alpha, beta, kk, kk, n),
            {SplittingFamily::GaussSeidelM2, 1.0});
        // The strictly-lower part of the E-matrix never touches the diagonal,
        // so diag(E) = (I - D_a - D_b)_{ii}.
        for (int i = 0; i < n; ++i) {
            double expect = 1.0;
            if (i + kk < n) expect -= alpha * maj(i, i + kk) * maj(i + kk, i);
            if (i - kk >= 0) expect -= beta * maj(i, i - kk) * maj(i - kk, i);
            CHECK(pair.e_matrix(i, i) == doctest::Approx(expect).epsilon(1e-14));
        }
    }
}

TEST_CASE("iteration_tensor: identity E returns F, plain Jacobi tensor is nonnegative") {
    const SplitPair jac =
        make_splitting(example1(), PreconditionerSpec::full_band(0, 0, 1, 1, 3),
                       {SplittingFamily::JacobiE2, 1.0});
    const Tensor it = iteration_tensor(jac);
    CHECK(max_abs_diff(it, jac.f_tensor) == 0.0);
    for (double v : it.data()) CHECK(v >= 0.0);
}

TEST_CASE("Gauss-Seidel beats Jacobi on the benchmark tensor") {
    const SplitPair jac = make_classical_splitting(example1(), ClassicalKind::Jacobi);
    const SplitPair gs = make_classical_splitting(example1(), ClassicalKind::GaussSeidel);
    const double rho_j = spectral_radius(iteration_tensor(jac)).rho;
    const double rho_gs = spectral_radius(iteration_tensor(gs)).rho;
    CHECK(rho_gs < rho_j);
    CHECK(rho_j < 1.0);
}

TEST_CASE("singular E-matrix is rejected") {
    Tensor a = example1();
    SplitPair pair = make_classical_splitting(a, ClassicalKind::Jacobi);
    pair.e_matrix = Matrix(3);  // zero matrix
    CHECK_THROWS_AS(iteration_tensor(pair), SingularEMatrixError);
    Tensor zero_diag = identity_tensor(3, 3);
    zero_diag.majorization_entry(1, 1) = 0.0;
    CHECK_THROWS_AS(make_classical_splitting(zero_diag, ClassicalKind::Jacobi),
                    SingularEMatrixError);
}

TEST_CASE("fifth splittings require s = k = 1") {
    CHECK_THROWS_AS(make_splitting(example1(),
                                   PreconditionerSpec::full_band(1, 1, 2, 2, 3),
                                   {SplittingFamily::JacobiE5, 1.0}),
                    VariantDomainError);
    CHECK_THROWS_AS(make_splitting(example1(),
                                   PreconditionerSpec::full_band(1, 1, 1, 2, 3),
                                   {SplittingFamily::GaussSeidelM5, 1.0}),
                    VariantDomainError);
}

TEST_CASE("SOR relaxation parameter domain") {
    CHECK_THROWS_AS(make_splitting(example1(), {}, {SplittingFamily::Sor, 0.0}),
                    VariantDomainError);
    CHECK_THROWS_AS(make_splitting(example1(), {}, {SplittingFamily::Sor, 2.0}),
                    VariantDomainError);
    CHECK_THROWS_AS(make_classical_splitting(example1(), ClassicalKind::Sor, -1.0),
                    VariantDomainError);
}

TEST_CASE("classical splittings reconstruct a raw (non-unit-diagonal) tensor") {
    const ExampleSystem ex3 = generate_example({3, 0});
    for (const ClassicalKind kind :
         {ClassicalKind::Jacobi, ClassicalKind::GaussSeidel, ClassicalKind::Sor}) {
        const SplitPair pair = make_classical_splitting(ex3.a, kind, 1.2);
        Tensor recon = matrix_tensor_product(pair.e_matrix, identity_tensor(3, 10));
        recon -= pair.f_tensor;
        CHECK(max_abs_diff(recon, ex3.a) <= 1e-10);
    }
    const SplitPair sor1 = make_classical_splitting(ex3.a, ClassicalKind::Sor, 1.0);
    const SplitPair gs = make_classical_splitting(ex3.a, ClassicalKind::GaussSeidel);
    CHECK(max_abs_diff(sor1.f_tensor, gs.f_tensor) == 0.0);
}

TEST_CASE("splitting family names round-trip") {
    for (const SplittingFamily f : kBandedFamilies)
        CHECK(splitting_family_from_string(to_string(f)) == f);
    CHECK_THROWS_AS(splitting_family_from_string("nope"), FormatError);
}
