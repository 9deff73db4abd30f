#include "msplit/lu.hpp"

#include <algorithm>
#include <cmath>

namespace msplit {

LuFactorization LuFactorization::compute(const Matrix& a) {
    const int n = a.dim();
    LuFactorization f;
    f.lu_ = a;
    f.perm_.resize(n);
    for (int i = 0; i < n; ++i) f.perm_[i] = i;

    double scale = 0.0;
    for (double v : a.data()) scale = std::max(scale, std::abs(v));
    const double tiny = scale * 1e-14;

    Matrix& lu = f.lu_;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(lu(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(lu(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (!(best > tiny))
            throw SingularEMatrixError("LU factorization hit a zero pivot");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
            std::swap(f.perm_[col], f.perm_[pivot]);
        }
        const double inv = 1.0 / lu(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double m = lu(r, col) * inv;
            lu(r, col) = m;
            if (m == 0.0) continue;
            for (int j = col + 1; j < n; ++j) lu(r, j) -= m * lu(col, j);
        }
    }
    return f;
}

Vector LuFactorization::solve(const Vector& rhs) const {
    if (static_cast<int>(rhs.size()) != dim())
        throw DimensionError("LU solve: dimension mismatch");
    Vector x = rhs;
    solve_rows(x.data(), 1);
    return x;
}

void LuFactorization::solve_rows(double* rows, std::size_t width) const {
    const int n = dim();
    // Apply the pivot permutation: row i <- row perm_[i], by cycle rotation.
    {
        std::vector<double> buf(width);
        std::vector<bool> seen(n, false);
        for (int start = 0; start < n; ++start) {
            if (seen[start] || perm_[start] == start) {
                seen[start] = true;
                continue;
            }
            std::copy_n(rows + static_cast<std::size_t>(start) * width, width, buf.data());
            int i = start;
            while (perm_[i] != start) {
                std::copy_n(rows + static_cast<std::size_t>(perm_[i]) * width, width,
                            rows + static_cast<std::size_t>(i) * width);
                seen[i] = true;
                i = perm_[i];
            }
            std::copy_n(buf.data(), width, rows + static_cast<std::size_t>(i) * width);
            seen[i] = true;
        }
    }
    // Forward substitution (unit lower triangle).
    for (int i = 1; i < n; ++i) {
        double* xi = rows + static_cast<std::size_t>(i) * width;
        for (int j = 0; j < i; ++j) {
            const double l = lu_(i, j);
            if (l == 0.0) continue;
            const double* xj = rows + static_cast<std::size_t>(j) * width;
            for (std::size_t r = 0; r < width; ++r) xi[r] -= l * xj[r];
        }
    }
    // Back substitution.
    for (int i = n - 1; i >= 0; --i) {
        double* xi = rows + static_cast<std::size_t>(i) * width;
        for (int j = i + 1; j < n; ++j) {
            const double u = lu_(i, j);
            if (u == 0.0) continue;
            const double* xj = rows + static_cast<std::size_t>(j) * width;
            for (std::size_t r = 0; r < width; ++r) xi[r] -= u * xj[r];
        }
        const double inv = 1.0 / lu_(i, i);
        for (std::size_t r = 0; r < width; ++r) xi[r] *= inv;
    }
}

}  // namespace msplit
