#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "msplit/errors.hpp"

namespace msplit {

using Vector = std::vector<double>;

/// Dense n x n square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int dim, double fill = 0.0);

    static Matrix identity(int dim);

    int dim() const { return dim_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double c);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, double c) { return lhs *= c; }

    /// Dense matrix product.
    Matrix operator*(const Matrix& rhs) const;

    /// Matrix-vector product.
    Vector apply(const Vector& x) const;

    bool all_finite() const;

private:
    int dim_ = 0;
    std::vector<double> a_;
};

/// Dense m-order, n-dimensional real tensor.
///
/// Entries are stored row-major in lexicographic order of (i1,...,im).
/// Indices are 0-based in code; all formulas in the documentation use the
/// conventional 1-based subscripts.
class Tensor {
public:
    Tensor() = default;
    Tensor(int order, int dim);
    Tensor(int order, int dim, std::vector<double> entries);

    int order() const { return order_; }
    int dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }

    /// Length of a mode-1 fiber block, i.e. n^(m-1).
    std::size_t slice_size() const { return slice_; }

    double& operator[](std::size_t flat) { return entries_[flat]; }
    double operator[](std::size_t flat) const { return entries_[flat]; }

    double& at(std::span<const int> idx) { return entries_[flatten(idx)]; }
    double at(std::span<const int> idx) const { return entries_[flatten(idx)]; }

    /// Entry a_{i,j,j,...,j}; these positions form the majorization matrix.
    double majorization_entry(int i, int j) const;
    double& majorization_entry(int i, int j);

    /// Contiguous mode-1 slice i (all entries with first index i).
    std::span<double> slice(int i) { return {entries_.data() + i * slice_, slice_}; }
    std::span<const double> slice(int i) const { return {entries_.data() + i * slice_, slice_}; }

    std::vector<double>& data() { return entries_; }
    const std::vector<double>& data() const { return entries_; }

    std::size_t flatten(std::span<const int> idx) const;

    Tensor& operator+=(const Tensor& rhs);
    Tensor& operator-=(const Tensor& rhs);
    Tensor& operator*=(double c);

    friend Tensor operator+(Tensor lhs, const Tensor& rhs) { return lhs += rhs; }
    friend Tensor operator-(Tensor lhs, const Tensor& rhs) { return lhs -= rhs; }
    friend Tensor operator*(Tensor lhs, double c) { return lhs *= c; }

    bool all_finite() const;
    bool is_nonnegative() const;

    double max_abs() const;

private:
    int order_ = 0;
    int dim_ = 0;
    std::size_t slice_ = 0;
    std::vector<double> entries_;
};

/// The m order n-dimensional identity tensor: 1 on the main diagonal, 0 elsewhere.
Tensor identity_tensor(int order, int dim);

/// Contraction (A x^{m-1})_i = sum a_{i,i2,...,im} x_{i2} ... x_{im}.
///
/// Accumulation is left-to-right over lexicographic (i2,...,im) for each i,
/// so results are bit-reproducible across runs.
Vector contract(const Tensor& a, const Vector& x);

/// Mode-1 matrix-tensor product (M B)_{j,i2..im} = sum_j2 M_{j,j2} b_{j2,i2..im}.
Tensor matrix_tensor_product(const Matrix& m, const Tensor& b);

/// Majorization matrix M(A)_{ij} = a_{i,j,...,j}.
Matrix majorization(const Tensor& a);

/// Componentwise (m-1)-th root; even roots of negative components throw
/// NegativeRadicandError, odd roots keep the sign. Magnitudes below 1e-300
/// are flushed to zero.
Vector elementwise_root(const Vector& v, int order);

/// Subtractive triangular split A = D*I - L*I - F, with D the diagonal of
/// M(A) and L the negated strict lower triangle of M(A). The rearrangement
/// is exact: no rounding is introduced.
struct SplitDlf {
    Matrix diag;
    Matrix lower;
    Tensor rest;
};
SplitDlf split_dlf(const Tensor& a);

/// Additive variant T = D*I + L*I + F used for decomposing band products
/// such as S_a^s L and K_b^k F.
struct AdditiveDlf {
    Matrix diag;
    Matrix lower;
    Tensor rest;
};
AdditiveDlf additive_dlf(const Tensor& t);

double norm2(const Vector& v);
double max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace msplit
