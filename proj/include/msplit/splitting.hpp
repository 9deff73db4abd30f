#pragma once

#include <string>

#include "msplit/precondition.hpp"
#include "msplit/tensor.hpp"

namespace msplit {

/// The Jacobi, Gauss-Seidel and SOR type splitting families of the
/// preconditioned system P A = E - F.
enum class SplittingFamily {
    JacobiE1,
    JacobiE2,
    JacobiE3,
    JacobiE4,
    JacobiE5,
    GaussSeidelM1,
    GaussSeidelM2,
    GaussSeidelM3,
    GaussSeidelM4,
    GaussSeidelM5,
    Sor,
    PrecondSor,
};

std::string to_string(SplittingFamily f);
SplittingFamily splitting_family_from_string(const std::string& name);

struct SplittingVariant {
    SplittingFamily family = SplittingFamily::JacobiE2;
    double omega = 1.0;  // SOR families only

    bool is_sor() const {
        return family == SplittingFamily::Sor || family == SplittingFamily::PrecondSor;
    }
};

/// A splitting A' = E - F. Every E-part in this family is a matrix times the
/// identity tensor, so E is stored as its majorization matrix: E = e_matrix I_m
/// and M(E) = e_matrix.
struct SplitPair {
    Matrix e_matrix;
    Tensor f_tensor;
    SplittingVariant variant;
    Tensor preconditioned_tensor;  // the A' this pair splits
};

/// Assemble the requested splitting of the preconditioned tensor P A.
///
/// `a` must have unit diagonal. JacobiE5 / GaussSeidelM5 are defined only for
/// s = k = 1 (VariantDomainError otherwise). The reconstruction identity
/// E I_m - F = P A is validated at build time and rejected above 1e-10.
SplitPair make_splitting(const Tensor& a, const PreconditionerSpec& spec, SplittingVariant v);

/// Classical Jacobi / Gauss-Seidel / SOR splitting of an arbitrary tensor via
/// its D, L, F parts (no unit-diagonal requirement).
enum class ClassicalKind { Jacobi, GaussSeidel, Sor };

SplitPair make_classical_splitting(const Tensor& a, ClassicalKind kind, double omega = 1.0);

/// The iteration tensor M(E)^{-1} F, computed by one LU factorization of the
/// E-matrix and a fiber solve per mode-1 column.
Tensor iteration_tensor(const SplitPair& split);

}  // namespace msplit
