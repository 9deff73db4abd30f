#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msplit/tensor.hpp"

namespace msplit {

enum class PreconditionerVariant {
    FullBand,        // P = I + S_a^s + K_b^k
    UpperOnly,       // P = I + S_a^s
    LowerOnly,       // P = I + K_b^k
    BaselineRow,     // P = I + S_a (first superdiagonal, s = 1)
    BaselineColumn,  // P = I + C_b (first column)
};

std::string to_string(PreconditionerVariant v);
PreconditionerVariant preconditioner_variant_from_string(const std::string& name);

/// Parameters of the banded preconditioner P = I + S_a^s + K_b^k and of the
/// two baseline preconditioners.
///
/// alpha has one entry per row 1..n-s of the upper band; beta one entry per
/// row k+1..n of the lower band (for BaselineColumn, per row 2..n of the
/// first column). Parameters outside [0,1] are allowed but leave the range
/// covered by the convergence theory; theory_range() reports this.
struct PreconditionerSpec {
    PreconditionerVariant variant = PreconditionerVariant::FullBand;
    std::vector<double> alpha;
    std::vector<double> beta;
    int s = 1;
    int k = 1;

    bool theory_range() const;

    /// Check lengths/ranges against a dimension; throws DimensionError.
    void validate(int n) const;

    static PreconditionerSpec full_band(double alpha, double beta, int s, int k, int n);
    static PreconditionerSpec upper_only(double alpha, int s, int n);
    static PreconditionerSpec lower_only(double beta, int k, int n);
    static PreconditionerSpec baseline_row(double alpha, int n);
    static PreconditionerSpec baseline_column(double beta, int n);
};

/// Divide each mode-1 slice of A and the matching component of b by the
/// diagonal entry a_{i...i}, so that the result has unit diagonal.
/// Throws NormalizationError if some a_{i...i} <= 0.
std::pair<Tensor, Vector> normalize_system(const Tensor& a, const Vector& b);

/// Band matrices drawn from (negated, scaled) majorization entries of A.
/// These accept any tensor; build_preconditioner additionally insists on a
/// unit diagonal.
Matrix upper_band_matrix(const Tensor& a, const std::vector<double>& alpha, int s);
Matrix lower_band_matrix(const Tensor& a, const std::vector<double>& beta, int k);
Matrix first_column_matrix(const Tensor& a, const std::vector<double>& beta);

/// Assemble the preconditioner matrix for a unit-diagonal tensor.
/// Throws NormalizationError when the diagonal is not 1.
Matrix build_preconditioner(const PreconditionerSpec& spec, const Tensor& a);

/// Left-multiply the system by P: returns (P A, P b).
std::pair<Tensor, Vector> precondition(const Matrix& p, const Tensor& a, const Vector& b);

enum class ConditionId { Eq7, Eq9, Eq10, Eq11 };

std::string to_string(ConditionId id);

/// Per-index products of the convergence conditions for the full-band
/// preconditioner. `satisfied` holds iff every product lies strictly in (0,1).
struct ConditionReport {
    ConditionId condition_id = ConditionId::Eq7;
    std::vector<double> values;
    bool satisfied = false;
    bool banded_interpretation = false;
};

/// Evaluate the convergence-condition products for a FullBand spec.
///
/// For s = k the banded pattern a_{i,(i+k)..} a_{(i+k),i..} is used as
/// printed. For k != s the default is the literal printed pattern
/// a_{i,(n-i)..} a_{(n-i),i..}; banded_interpretation = true substitutes the
/// band pattern a_{i,(i+s)..} a_{(i+s),i..} instead.
ConditionReport check_conditions(const Tensor& a, const PreconditionerSpec& spec,
                                 bool banded_interpretation = false);

/// Z / strong-M classification via eta = max_i a_{i..i}, B = eta*I - A and
/// a Perron-radius estimate of B.
struct Classification {
    bool is_z = false;
    bool is_strong_m = false;
    double eta = 0.0;
    double rho_b = 0.0;
    double rho_lower = 0.0;
    double rho_upper = 0.0;
    std::string reason;
    /// Positive x with A x^{m-1} = 1 when the classification solve converges.
    std::optional<Vector> positive_certificate;
};

Classification classify(const Tensor& a, bool with_certificate = false);

}  // namespace msplit
