#include "msplit/precondition.hpp"

#include <algorithm>
#include <cmath>

namespace msplit {

namespace {

bool in_unit_interval(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0 && x <= 1.0; });
}

void require_nonnegative(const std::vector<double>& v, const char* name) {
    for (double x : v)
        if (x < 0.0) throw DimensionError(std::string(name) + " entries must be >= 0");
}

void require_unit_diagonal(const Tensor& a) {
    for (int i = 0; i < a.dim(); ++i)
        if (std::abs(a.majorization_entry(i, i) - 1.0) > 1e-12)
            throw NormalizationError("tensor diagonal is not 1; normalize the system first");
}

}  // namespace

std::string to_string(PreconditionerVariant v) {
    switch (v) {
        case PreconditionerVariant::FullBand: return "full_band";
        case PreconditionerVariant::UpperOnly: return "upper_only";
        case PreconditionerVariant::LowerOnly: return "lower_only";
        case PreconditionerVariant::BaselineRow: return "baseline_row";
        case PreconditionerVariant::BaselineColumn: return "baseline_column";
    }
    return "full_band";
}

PreconditionerVariant preconditioner_variant_from_string(const std::string& name) {
    if (name == "full_band") return PreconditionerVariant::FullBand;
    if (name == "upper_only") return PreconditionerVariant::UpperOnly;
    if (name == "lower_only") return PreconditionerVariant::LowerOnly;
    if (name == "baseline_row") return PreconditionerVariant::BaselineRow;
    if (name == "baseline_column") return PreconditionerVariant::BaselineColumn;
    throw FormatError("unknown preconditioner variant: " + name);
}

bool PreconditionerSpec::theory_range() const {
    return in_unit_interval(alpha) && in_unit_interval(beta);
}

void PreconditionerSpec::validate(int n) const {
    require_nonnegative(alpha, "alpha");
    require_nonnegative(beta, "beta");
    const bool uses_s = variant == PreconditionerVariant::FullBand ||
                        variant == PreconditionerVariant::UpperOnly ||
                        variant == PreconditionerVariant::BaselineRow;
    const bool uses_k = variant == PreconditionerVariant::FullBand ||
                        variant == PreconditionerVariant::LowerOnly;
    if (uses_s) {
        const int ss = (variant == PreconditionerVariant::BaselineRow) ? 1 : s;
        if (ss < 1 || ss > n - 1) throw DimensionError("band offset s out of 1..n-1");
        if (static_cast<int>(alpha.size()) != n - ss)
            throw DimensionError("alpha must have n-s entries");
    }
    if (uses_k) {
        if (k < 1 || k > n - 1) throw DimensionError("band offset k out of 1..n-1");
        if (static_cast<int>(beta.size()) != n - k)
            throw DimensionError("beta must have n-k entries");
    }
    if (variant == PreconditionerVariant::BaselineColumn &&
        static_cast<int>(beta.size()) != n - 1)
        throw DimensionError("baseline column needs n-1 beta entries");
}

PreconditionerSpec PreconditionerSpec::full_band(double alpha, double beta, int s, int k, int n) {
    PreconditionerSpec spec;
    spec.variant = PreconditionerVariant::FullBand;
    spec.s = s;
    spec.k = k;
    spec.alpha.assign(std::max(0, n - s), alpha);
    spec.beta.assign(std::max(0, n - k), beta);
    return spec;
}

PreconditionerSpec PreconditionerSpec::upper_only(double alpha, int s, int n) {
    PreconditionerSpec spec;
    spec.variant = PreconditionerVariant::UpperOnly;
    spec.s = s;
    spec.alpha.assign(std::max(0, n - s), alpha);
    return spec;
}

PreconditionerSpec PreconditionerSpec::lower_only(double beta, int k, int n) {
    PreconditionerSpec spec;
    spec.variant = PreconditionerVariant::LowerOnly;
    spec.k = k;
    spec.beta.assign(std::max(0, n - k), beta);
    return spec;
}

PreconditionerSpec PreconditionerSpec::baseline_row(double alpha, int n) {
    PreconditionerSpec spec;
    spec.variant = PreconditionerVariant::BaselineRow;
    spec.s = 1;
    spec.alpha.assign(std::max(0, n - 1), alpha);
    return spec;
}

PreconditionerSpec PreconditionerSpec::baseline_column(double beta, int n) {
    PreconditionerSpec spec;
    spec.variant = PreconditionerVariant::BaselineColumn;
    spec.beta.assign(std::max(0, n - 1), beta);
    return spec;
}

std::pair<Tensor, Vector> normalize_system(const Tensor& a, const Vector& b) {
    const int n = a.dim();
    if (static_cast<int>(b.size()) != n)
        throw DimensionError("normalize_system: dimension mismatch");
    Tensor out = a;
    Vector bn = b;
    for (int i = 0; i < n; ++i) {
        const double d = a.majorization_entry(i, i);
        if (!(d > 0.0))
            throw NormalizationError("non-positive diagonal entry; cannot normalize");
        const double inv = 1.0 / d;
        auto s = out.slice(i);
        for (double& v : s) v *= inv;
        out.majorization_entry(i, i) = 1.0;  // exact, avoids d/d rounding
        bn[i] *= inv;
    }
    return {std::move(out), std::move(bn)};
}

Matrix upper_band_matrix(const Tensor& a, const std::vector<double>& alpha, int s) {
    const int n = a.dim();
    if (s < 1 || s > n - 1) throw DimensionError("upper band offset out of range");
    if (static_cast<int>(alpha.size()) != n - s)
        throw DimensionError("alpha must have n-s entries");
    Matrix m(n);
    for (int i = 0; i + s < n; ++i) m(i, i + s) = -alpha[i] * a.majorization_entry(i, i + s);
    return m;
}

Matrix lower_band_matrix(const Tensor& a, const std::vector<double>& beta, int k) {
    const int n = a.dim();
    if (k < 1 || k > n - 1) throw DimensionError("lower band offset out of range");
    if (static_cast<int>(beta.size()) != n - k)
        throw DimensionError("beta must have n-k entries");
    Matrix m(n);
    for (int i = k; i < n; ++i) m(i, i - k) = -beta[i - k] * a.majorization_entry(i, i - k);
    return m;
}

Matrix first_column_matrix(const Tensor& a, const std::vector<double>& beta) {
    const int n = a.dim();
    if (static_cast<int>(beta.size()) != n - 1)
        throw DimensionError("beta must have n-1 entries");
    Matrix m(n);
    for (int i = 1; i < n; ++i) m(i, 0) = -beta[i - 1] * a.majorization_entry(i, 0);
    return m;
}

Matrix build_preconditioner(const PreconditionerSpec& spec, const Tensor& a) {
    const int n = a.dim();
    spec.validate(n);
    require_unit_diagonal(a);
    Matrix p = Matrix::identity(n);
    switch (spec.variant) {
        case PreconditionerVariant::FullBand:
            p += upper_band_matrix(a, spec.alpha, spec.s);
            p += lower_band_matrix(a, spec.beta, spec.k);
            break;
        case PreconditionerVariant::UpperOnly:
            p += upper_band_matrix(a, spec.alpha, spec.s);
            break;
        case PreconditionerVariant::LowerOnly:
            p += lower_band_matrix(a, spec.beta, spec.k);
            break;
        case PreconditionerVariant::BaselineRow:
            p += upper_band_matrix(a, spec.alpha, 1);
            break;
        case PreconditionerVariant::BaselineColumn:
            p += first_column_matrix(a, spec.beta);
            break;
    }
    return p;
}

std::pair<Tensor, Vector> precondition(const Matrix& p, const Tensor& a, const Vector& b) {
    if (p.dim() != a.dim() || static_cast<int>(b.size()) != a.dim())
        throw DimensionError("precondition: dimension mismatch");
    return {matrix_tensor_product(p, a), p.apply(b)};
}

std::string to_string(ConditionId id) {
    switch (id) {
        case ConditionId::Eq7: return "eq7";
        case ConditionId::Eq9: return "eq9";
        case ConditionId::Eq10: return "eq10";
        case ConditionId::Eq11: return "eq11";
    }
    return "eq7";
}

ConditionReport check_conditions(const Tensor& a, const PreconditionerSpec& spec,
                                 bool banded_interpretation) {
    if (spec.variant != PreconditionerVariant::FullBand)
        throw VariantDomainError("check_conditions expects the full-band preconditioner");
    const int n = a.dim();
    spec.validate(n);
    const Matrix maj = majorization(a);
    const int s = spec.s;
    const int k = spec.k;

    ConditionReport report;
    report.banded_interpretation = banded_interpretation && s != k;
    report.values.assign(n, 0.0);

    // 0-based row i0 carries alpha[i0] (rows 1..n-s) and beta[i0-k] (rows k+1..n).
    auto alpha_at = [&](int i0) { return i0 < static_cast<int>(spec.alpha.size()) ? spec.alpha[i0] : 0.0; };
    auto beta_at = [&](int i0) {
        const int idx = i0 - k;
        return idx >= 0 && idx < static_cast<int>(spec.beta.size()) ? spec.beta[idx] : 0.0;
    };
    auto beta_term = [&](int i0) { return beta_at(i0) * maj(i0, i0 - k) * maj(i0 - k, i0); };

    if (s == k) {
        report.condition_id = (s == 1) ? ConditionId::Eq7 : ConditionId::Eq11;
        auto alpha_term = [&](int i0) { return alpha_at(i0) * maj(i0, i0 + k) * maj(i0 + k, i0); };
        for (int i0 = 0; i0 < n; ++i0) {
            double v = 0.0;
            if (i0 + k < n) v += alpha_term(i0);
            if (i0 - k >= 0) v += beta_term(i0);
            report.values[i0] = v;
        }
    } else {
        report.condition_id = (k < s) ? ConditionId::Eq9 : ConditionId::Eq10;
        // Literal printed pattern pairs index i with n-i; the banded reading
        // substitutes the s-band pair instead.
        auto alpha_term = [&](int i0) -> double {
            if (report.banded_interpretation) {
                if (i0 + s >= n) return 0.0;
                return alpha_at(i0) * maj(i0, i0 + s) * maj(i0 + s, i0);
            }
            const int j0 = n - (i0 + 1) - 1;  // 1-based n-i
            if (j0 < 0 || j0 >= n) return 0.0;
            return alpha_at(i0) * maj(i0, j0) * maj(j0, i0);
        };
        const int lo = std::min(s, k);  // alpha-only rows 1..min, mixed rows min+1..max
        const int hi = std::max(s, k);
        for (int i0 = 0; i0 < n; ++i0) {
            const int i = i0 + 1;
            double v = 0.0;
            if (i <= lo) {
                v = alpha_term(i0);
            } else if (i <= hi) {
                v = alpha_term(i0) + (i0 - k >= 0 ? beta_term(i0) : 0.0);
            } else {
                v = (i0 - k >= 0) ? beta_term(i0) : 0.0;
            }
            report.values[i0] = v;
        }
    }

    report.satisfied = std::all_of(report.values.begin(), report.values.end(),
                                   [](double v) { return v > 0.0 && v < 1.0; });
    return report;
}

}  // namespace msplit
