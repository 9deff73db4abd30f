#include <cmath>
#include <random>

#include "doctest.h"
#include "msplit/tensor.hpp"
#include "test_util.hpp"

using namespace msplit;
using msplit::testing::contract_oracle;
using msplit::testing::random_strong_m_tensor;

namespace {

Tensor example1_tensor() { return generate_example({1, 0}).a; }

Tensor random_tensor(std::mt19937& rng, int m, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Tensor t(m, n);
    for (double& v : t.data()) v = u(rng);
    return t;
}

Matrix random_matrix(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(n);
    for (double& v : m.data()) v = u(rng);
    return m;
}

Vector random_vector(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector v(n);
    for (double& x : v) x = u(rng);
    return v;
}

}  // namespace

TEST_CASE("contract: identity tensor gives componentwise powers") {
    const Tensor id = identity_tensor(3, 2);
    const Vector y = contract(id, {1.0, 2.0});
    CHECK(y[0] == doctest::Approx(1.0));
    CHECK(y[1] == doctest::Approx(4.0));
}

TEST_CASE("contract: first component of the 3x3x3 benchmark tensor at ones") {
    const Vector y = contract(example1_tensor(), {1.0, 1.0, 1.0});
    CHECK(y[0] == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(contract_oracle(example1_tensor(), {1.0, 1.0, 1.0})[0] ==
          doctest::Approx(0.64).epsilon(1e-12));
}

TEST_CASE("contract: zero vector maps to zero") {
    std::mt19937 rng(7);
    const Tensor a = random_tensor(rng, 4, 3);
    for (double y : contract(a, Vector(3, 0.0))) CHECK(y == 0.0);
}

TEST_CASE("contract: dimension mismatch") {
    CHECK_THROWS_AS(contract(identity_tensor(3, 2), Vector(3, 1.0)), DimensionError);
}

TEST_CASE("contract matches the nested-loop oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const int m = trial % 2 == 0 ? 3 : 4;
        const int n = 2 + trial % 7;
        const Tensor a = random_tensor(rng, m, n);
        const Vector x = random_vector(rng, n);
        const Vector got = contract(a, x);
        const Vector want = contract_oracle(a, x);
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(got[i] - want[i]) <=
                  1e-13 * std::max(1.0, std::abs(want[i])));
    }
}

TEST_CASE("matrix_tensor_product: identity and zero matrices") {
    std::mt19937 rng(13);
    const Tensor b = random_tensor(rng, 3, 4);
    CHECK(max_abs_diff(matrix_tensor_product(Matrix::identity(4), b), b) == 0.0);
    CHECK(matrix_tensor_product(Matrix(4), b).max_abs() == 0.0);
}

TEST_CASE("matrix_tensor_product: single entry against the double-loop oracle") {
    std::mt19937 rng(17);
    const Matrix m = random_matrix(rng, 3);
    const Tensor b = random_tensor(rng, 3, 3);
    const Tensor c = matrix_tensor_product(m, b);
    double want = 0.0;
    for (int j2 = 0; j2 < 3; ++j2) {
        const int idx[3] = {j2, 1, 2};
        want += m(0, j2) * b.at(idx);
    }
    const int out_idx[3] = {0, 1, 2};
    CHECK(c.at(out_idx) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("matrix_tensor_product equals the mode-1 flattening product") {
    std::mt19937 rng(19);
    const int n = 4;
    const Matrix m = random_matrix(rng, n);
    const Tensor b = random_tensor(rng, 3, n);
    const Tensor c = matrix_tensor_product(m, b);
    for (int j = 0; j < n; ++j) {
        auto row = c.slice(j);
        for (std::size_t r = 0; r < b.slice_size(); ++r) {
            double want = 0.0;
            for (int j2 = 0; j2 < n; ++j2) want += m(j, j2) * b.slice(j2)[r];
            CHECK(std::abs(row[r] - want) <= 1e-14 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("contract is associative through mode 1") {
    std::mt19937 rng(23);
    const int n = 5;
    const Matrix m = random_matrix(rng, n);
    const Tensor b = random_tensor(rng, 3, n);
    const Vector x = random_vector(rng, n);
    const Vector lhs = contract(matrix_tensor_product(m, b), x);
    const Vector rhs = m.apply(contract(b, x));
    for (int i = 0; i < n; ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
}

TEST_CASE("majorization: identity, benchmark entries, zero") {
    CHECK(majorization(identity_tensor(4, 3))(1, 1) == 1.0);
    CHECK(majorization(identity_tensor(4, 3))(0, 2) == 0.0);
    const Matrix m = majorization(example1_tensor());
    CHECK(m(0, 0) == doctest::Approx(1.00));
    CHECK(m(0, 1) == doctest::Approx(-0.07));
    CHECK(majorization(Tensor(3, 3)).data() == Matrix(3).data());
}

TEST_CASE("majorization recovers the matrix factor of M I_m") {
    std::mt19937 rng(29);
    const Matrix m = random_matrix(rng, 4);
    const Tensor t = matrix_tensor_product(m, identity_tensor(3, 4));
    CHECK(majorization(t).data() == m.data());
}

TEST_CASE("identity_tensor: order 2 is the identity matrix, entries sum to n") {
    const Tensor id2 = identity_tensor(2, 5);
    CHECK(majorization(id2).data() == Matrix::identity(5).data());
    const Tensor id4 = identity_tensor(4, 6);
    double sum = 0.0;
    for (double v : id4.data()) sum += v;
    CHECK(sum == doctest::Approx(6.0));
    CHECK_THROWS_AS(identity_tensor(1, 3), DimensionError);
}

TEST_CASE("elementwise_root: square roots, odd roots, negative radicand") {
    const Vector r = elementwise_root({4.0, 9.0}, 3);
    CHECK(r[0] == doctest::Approx(2.0));
    CHECK(r[1] == doctest::Approx(3.0));
    CHECK(elementwise_root({-8.0}, 4)[0] == doctest::Approx(-2.0));
    CHECK_THROWS_AS(elementwise_root({-1.0}, 3), NegativeRadicandError);
    CHECK(elementwise_root({1e-301}, 3)[0] == 0.0);
}

TEST_CASE("split_dlf: identity tensor decomposes trivially") {
    const SplitDlf parts = split_dlf(identity_tensor(3, 3));
    CHECK(parts.diag.data() == Matrix::identity(3).data());
    CHECK(parts.lower.data() == Matrix(3).data());
    CHECK(parts.rest.max_abs() == 0.0);
}

TEST_CASE("split_dlf: negated lower entry of the benchmark tensor") {
    CHECK(split_dlf(example1_tensor()).lower(1, 0) == doctest::Approx(0.02));
}

TEST_CASE("split_dlf reconstruction is exact") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const Tensor a = random_tensor(rng, 3, 4);
        const SplitDlf parts = split_dlf(a);
        Tensor recon = matrix_tensor_product(parts.diag, identity_tensor(3, 4));
        recon -= matrix_tensor_product(parts.lower, identity_tensor(3, 4));
        recon -= parts.rest;
        CHECK(max_abs_diff(recon, a) == 0.0);
    }
}

TEST_CASE("additive_dlf reconstruction is exact") {
    std::mt19937 rng(37);
    const Tensor t = random_tensor(rng, 3, 5);
    const AdditiveDlf parts = additive_dlf(t);
    Tensor recon = matrix_tensor_product(parts.diag, identity_tensor(3, 5));
    recon += matrix_tensor_product(parts.lower, identity_tensor(3, 5));
    recon += parts.rest;
    CHECK(max_abs_diff(recon, t) == 0.0);
}

TEST_CASE("tensor constructor validates the entry count") {
    CHECK_THROWS_AS(Tensor(3, 3, std::vector<double>(26, 0.0)), DimensionError);
    CHECK_NOTHROW(Tensor(3, 3, std::vector<double>(27, 0.0)));
}
