#include "msplit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace msplit {

namespace {

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

Matrix::Matrix(int dim, double fill) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, fill) {}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rhs.dim_ != dim_) throw DimensionError("matrix addition: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rhs.dim_ != dim_) throw DimensionError("matrix subtraction: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(double c) {
    for (double& v : a_) v *= c;
    return *this;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (rhs.dim_ != dim_) throw DimensionError("matrix product: dimension mismatch");
    Matrix out(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int l = 0; l < dim_; ++l) {
            const double a_il = (*this)(i, l);
            if (a_il == 0.0) continue;
            for (int j = 0; j < dim_; ++j) out(i, j) += a_il * rhs(l, j);
        }
    }
    return out;
}

Vector Matrix::apply(const Vector& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionError("matvec: dimension mismatch");
    Vector y(dim_, 0.0);
    for (int i = 0; i < dim_; ++i) {
        double acc = 0.0;
        for (int j = 0; j < dim_; ++j) acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

bool Matrix::all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
}

Tensor::Tensor(int order, int dim) : order_(order), dim_(dim) {
    if (order < 2) throw DimensionError("tensor order must be >= 2");
    if (dim < 1) throw DimensionError("tensor dimension must be >= 1");
    slice_ = ipow(static_cast<std::size_t>(dim), order - 1);
    entries_.assign(slice_ * dim, 0.0);
}

Tensor::Tensor(int order, int dim, std::vector<double> entries) : Tensor(order, dim) {
    if (entries.size() != entries_.size())
        throw DimensionError("tensor entries: expected n^m values");
    entries_ = std::move(entries);
}

std::size_t Tensor::flatten(std::span<const int> idx) const {
    std::size_t flat = 0;
    for (int v : idx) flat = flat * dim_ + static_cast<std::size_t>(v);
    return flat;
}

double Tensor::majorization_entry(int i, int j) const {
    // flat index of (i, j, j, ..., j)
    std::size_t flat = static_cast<std::size_t>(i);
    for (int t = 1; t < order_; ++t) flat = flat * dim_ + j;
    return entries_[flat];
}

double& Tensor::majorization_entry(int i, int j) {
    std::size_t flat = static_cast<std::size_t>(i);
    for (int t = 1; t < order_; ++t) flat = flat * dim_ + j;
    return entries_[flat];
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
    if (rhs.order_ != order_ || rhs.dim_ != dim_)
        throw DimensionError("tensor addition: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& rhs) {
    if (rhs.order_ != order_ || rhs.dim_ != dim_)
        throw DimensionError("tensor subtraction: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Tensor& Tensor::operator*=(double c) {
    for (double& v : entries_) v *= c;
    return *this;
}

bool Tensor::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](double v) { return std::isfinite(v); });
}

bool Tensor::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v >= 0.0; });
}

double Tensor::max_abs() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

Tensor identity_tensor(int order, int dim) {
    if (order < 2) throw DimensionError("identity_tensor: order must be >= 2");
    Tensor t(order, dim);
    for (int i = 0; i < dim; ++i) t.majorization_entry(i, i) = 1.0;
    return t;
}

Vector contract(const Tensor& a, const Vector& x) {
    const int n = a.dim();
    if (static_cast<int>(x.size()) != n) throw DimensionError("contract: dimension mismatch");

    // Weight vector w[(i2,...,im)] = x_i2 * ... * x_im in lexicographic order,
    // so each output component is a single ordered dot product.
    std::vector<double> w{1.0};
    for (int t = 1; t < a.order(); ++t) {
        std::vector<double> next(w.size() * n);
        std::size_t pos = 0;
        for (int i = 0; i < n; ++i)
            for (double v : w) next[pos++] = x[i] * v;
        w = std::move(next);
    }

    Vector y(n, 0.0);
    for (int i = 0; i < n; ++i) {
        auto s = a.slice(i);
        double acc = 0.0;
        for (std::size_t r = 0; r < w.size(); ++r) acc += s[r] * w[r];
        y[i] = acc;
    }
    return y;
}

Tensor matrix_tensor_product(const Matrix& m, const Tensor& b) {
    const int n = b.dim();
    if (m.dim() != n) throw DimensionError("matrix_tensor_product: dimension mismatch");
    Tensor c(b.order(), n);
    const std::size_t width = b.slice_size();
    for (int j = 0; j < n; ++j) {
        auto out = c.slice(j);
        for (int j2 = 0; j2 < n; ++j2) {
            const double w = m(j, j2);
            if (w == 0.0) continue;
            auto in = b.slice(j2);
            for (std::size_t r = 0; r < width; ++r) out[r] += w * in[r];
        }
    }
    return c;
}

Matrix majorization(const Tensor& a) {
    const int n = a.dim();
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a.majorization_entry(i, j);
    return m;
}

Vector elementwise_root(const Vector& v, int order) {
    if (order < 2) throw DimensionError("elementwise_root: order must be >= 2");
    const int p = order - 1;
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double x = v[i];
        if (std::abs(x) < 1e-300) {
            out[i] = 0.0;
        } else if (p % 2 == 0) {
            if (x < 0.0)
                throw NegativeRadicandError("even-order root of a negative component");
            out[i] = (p == 2) ? std::sqrt(x) : std::pow(x, 1.0 / p);
        } else {
            out[i] = std::copysign(std::pow(std::abs(x), 1.0 / p), x);
        }
    }
    return out;
}

SplitDlf split_dlf(const Tensor& a) {
    const int n = a.dim();
    SplitDlf parts{Matrix(n), Matrix(n), a};
    Tensor& f = parts.rest;
    f *= -1.0;  // F = D*I - L*I - A, built as -A then patched on majorization slots
    for (int i = 0; i < n; ++i) {
        parts.diag(i, i) = a.majorization_entry(i, i);
        f.majorization_entry(i, i) = 0.0;
        for (int j = 0; j < i; ++j) {
            parts.lower(i, j) = -a.majorization_entry(i, j);
            f.majorization_entry(i, j) = 0.0;
        }
    }
    return parts;
}

AdditiveDlf additive_dlf(const Tensor& t) {
    const int n = t.dim();
    AdditiveDlf parts{Matrix(n), Matrix(n), t};
    Tensor& f = parts.rest;
    for (int i = 0; i < n; ++i) {
        parts.diag(i, i) = t.majorization_entry(i, i);
        f.majorization_entry(i, i) = 0.0;
        for (int j = 0; j < i; ++j) {
            parts.lower(i, j) = t.majorization_entry(i, j);
            f.majorization_entry(i, j) = 0.0;
        }
    }
    return parts;
}

double norm2(const Vector& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
    if (a.order() != b.order() || a.dim() != b.dim())
        throw DimensionError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace msplit
