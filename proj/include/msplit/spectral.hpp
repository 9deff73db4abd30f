#pragma once

#include "msplit/splitting.hpp"
#include "msplit/tensor.hpp"

namespace msplit {

/// Bracketed Perron-radius estimate of a nonnegative tensor.
struct SpectralEstimate {
    double rho = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    int iterations = 0;
    bool converged = false;
    bool shifted = false;        // a small positive shift was applied (reducible input)
    double shift_epsilon = 0.0;
    Vector perron;               // final normalized iterate
};

/// Power-type (Collatz-Wielandt) iteration for the spectral radius of a
/// nonnegative tensor: the ratios (T x^{m-1})_i / x_i^{m-1} bracket rho and the
/// iterate is renormalized in the max-norm each step.
///
/// Tensors with an identically zero mode-1 slice are shifted by
/// eps = 1e-12 * max-entry before iterating; if the bracket fails to close the
/// same shift is applied as a fallback and the run is marked `shifted`.
/// Throws NotNonnegativeError on entries below -1e-13 * max-entry; closer to
/// zero counts as rounding dust from upstream solves and is clamped.
SpectralEstimate spectral_radius(const Tensor& t, double tol = 1e-10, int max_iter = 10000);

enum class RhoOrdering { LessOrEqual, GreaterOrEqual, Indistinguishable };

/// Compare the Perron radii of two splittings' iteration tensors.
/// Radii closer than tol are Indistinguishable.
RhoOrdering compare_rho(const SplitPair& a, const SplitPair& b, double tol = 1e-8);

/// Strong connectivity of the nonzero digraph of a matrix. Irreducibility of
/// M(A) is a sufficient condition for irreducibility of A.
bool is_irreducible(const Matrix& m);
bool majorization_irreducible(const Tensor& a);

}  // namespace msplit
