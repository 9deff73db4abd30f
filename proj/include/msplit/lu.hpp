#pragma once

#include <cstddef>
#include <vector>

#include "msplit/tensor.hpp"

namespace msplit {

/// Dense LU factorization with partial pivoting, used to apply M(E)^{-1}.
///
/// One factorization serves both single right-hand sides and whole tensors:
/// with row-major storage the mode-1 flattening of a tensor is n contiguous
/// rows, so forward/backward substitution runs over full rows at a time.
class LuFactorization {
public:
    /// Factor a square matrix; throws SingularEMatrixError if a pivot is
    /// (numerically) zero.
    static LuFactorization compute(const Matrix& a);

    Vector solve(const Vector& rhs) const;

    /// Solve A X = B in place, where B is n rows of `width` contiguous values.
    void solve_rows(double* rows, std::size_t width) const;

    int dim() const { return lu_.dim(); }

private:
    Matrix lu_;
    std::vector<int> perm_;
};

}  // namespace msplit
