#include "msplit/splitting.hpp"

#include <cmath>
#include <utility>

#include "msplit/lu.hpp"

namespace msplit {

namespace {

void require_unit_diagonal(const Tensor& a) {
    for (int i = 0; i < a.dim(); ++i)
        if (std::abs(a.majorization_entry(i, i) - 1.0) > 1e-12)
            throw NormalizationError("splittings are defined for unit-diagonal tensors");
}

/// M I_m: the tensor with M(i,j) at position (i,j,...,j) and zeros elsewhere.
Tensor matrix_times_identity(const Matrix& m, int order) {
    Tensor t(order, m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) t.majorization_entry(i, j) = m(i, j);
    return t;
}

void add_matrix_on_majorization(Tensor& t, const Matrix& m, double scale = 1.0) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) t.majorization_entry(i, j) += scale * m(i, j);
}

struct Bands {
    Matrix p;  // I + S + K
    Matrix s;  // upper band S_a^s (zero when absent)
    Matrix k;  // lower band K_b^k (zero when absent)
};

Bands resolve_bands(const Tensor& a, const PreconditionerSpec& spec) {
    const int n = a.dim();
    spec.validate(n);
    Bands b{Matrix::identity(n), Matrix(n), Matrix(n)};
    switch (spec.variant) {
        case PreconditionerVariant::FullBand:
            b.s = upper_band_matrix(a, spec.alpha, spec.s);
            b.k = lower_band_matrix(a, spec.beta, spec.k);
            break;
        case PreconditionerVariant::UpperOnly:
            b.s = upper_band_matrix(a, spec.alpha, spec.s);
            break;
        case PreconditionerVariant::LowerOnly:
            b.k = lower_band_matrix(a, spec.beta, spec.k);
            break;
        default:
            throw VariantDomainError(
                "baseline preconditioners pair with the classical splittings, not the "
                "banded families");
    }
    b.p += b.s;
    b.p += b.k;
    return b;
}

void check_reconstruction(const SplitPair& pair) {
    const Tensor recon =
        matrix_times_identity(pair.e_matrix, pair.f_tensor.order()) - pair.f_tensor;
    const double diff = max_abs_diff(recon, pair.preconditioned_tensor);
    if (diff > 1e-10)
        throw Error("splitting reconstruction failed: E I - F deviates by " +
                    std::to_string(diff));
    // Left-nonsingularity of E.
    (void)LuFactorization::compute(pair.e_matrix);
}

}  // namespace

std::string to_string(SplittingFamily f) {
    switch (f) {
        case SplittingFamily::JacobiE1: return "e1f1";
        case SplittingFamily::JacobiE2: return "e2f2";
        case SplittingFamily::JacobiE3: return "e3f3";
        case SplittingFamily::JacobiE4: return "e4f4";
        case SplittingFamily::JacobiE5: return "e5f5";
        case SplittingFamily::GaussSeidelM1: return "m1n1";
        case SplittingFamily::GaussSeidelM2: return "m2n2";
        case SplittingFamily::GaussSeidelM3: return "m3n3";
        case SplittingFamily::GaussSeidelM4: return "m4n4";
        case SplittingFamily::GaussSeidelM5: return "m5n5";
        case SplittingFamily::Sor: return "sor";
        case SplittingFamily::PrecondSor: return "psor";
    }
    return "e2f2";
}

SplittingFamily splitting_family_from_string(const std::string& name) {
    if (name == "e1f1") return SplittingFamily::JacobiE1;
    if (name == "e2f2") return SplittingFamily::JacobiE2;
    if (name == "e3f3") return SplittingFamily::JacobiE3;
    if (name == "e4f4") return SplittingFamily::JacobiE4;
    if (name == "e5f5") return SplittingFamily::JacobiE5;
    if (name == "m1n1") return SplittingFamily::GaussSeidelM1;
    if (name == "m2n2") return SplittingFamily::GaussSeidelM2;
    if (name == "m3n3") return SplittingFamily::GaussSeidelM3;
    if (name == "m4n4") return SplittingFamily::GaussSeidelM4;
    if (name == "m5n5") return SplittingFamily::GaussSeidelM5;
    if (name == "sor") return SplittingFamily::Sor;
    if (name == "psor") return SplittingFamily::PrecondSor;
    throw FormatError("unknown splitting family: " + name);
}

SplitPair make_splitting(const Tensor& a, const PreconditionerSpec& spec, SplittingVariant v) {
    require_unit_diagonal(a);
    const int n = a.dim();
    const int m = a.order();

    if (v.is_sor() && !(v.omega > 0.0 && v.omega < 2.0))
        throw VariantDomainError("SOR relaxation parameter must lie in (0,2)");

    const SplitDlf dlf = split_dlf(a);
    const Matrix& low = dlf.lower;    // L >= 0 for Z-tensors (negated strict lower)
    const Tensor& rest = dlf.rest;    // F

    SplitPair pair;
    pair.variant = v;

    if (v.family == SplittingFamily::Sor) {
        pair.preconditioned_tensor = a;
        pair.e_matrix = Matrix::identity(n) - low * v.omega;
        pair.e_matrix *= 1.0 / v.omega;
        pair.f_tensor = rest;
        add_matrix_on_majorization(pair.f_tensor,
                                   Matrix::identity(n) * ((1.0 - v.omega) / v.omega));
        check_reconstruction(pair);
        return pair;
    }

    const Bands bands = resolve_bands(a, spec);
    pair.preconditioned_tensor = matrix_tensor_product(bands.p, a);

    const bool fifth = v.family == SplittingFamily::JacobiE5 ||
                       v.family == SplittingFamily::GaussSeidelM5;
    if (fifth && (spec.s != 1 || spec.k != 1))
        throw VariantDomainError("the fifth Jacobi/Gauss-Seidel splittings need s = k = 1");

    switch (v.family) {
        case SplittingFamily::JacobiE1: {
            // E1 = P I, F1 = P(L I + F)
            pair.e_matrix = bands.p;
            pair.f_tensor = matrix_tensor_product(bands.p, rest);
            add_matrix_on_majorization(pair.f_tensor, bands.p * low);
            break;
        }
        case SplittingFamily::JacobiE2:
        case SplittingFamily::JacobiE3:
        case SplittingFamily::JacobiE4: {
            // E = I, F = P(L I + F) - (S + K) I
            pair.e_matrix = Matrix::identity(n);
            pair.f_tensor = matrix_tensor_product(bands.p, rest);
            add_matrix_on_majorization(pair.f_tensor, bands.p * low);
            add_matrix_on_majorization(pair.f_tensor, bands.s, -1.0);
            add_matrix_on_majorization(pair.f_tensor, bands.k, -1.0);
            break;
        }
        case SplittingFamily::JacobiE5: {
            // All-parameters-one bands K and S, fixed by definition.
            const Matrix k1 = lower_band_matrix(a, std::vector<double>(n - 1, 1.0), 1);
            const Matrix s1 = upper_band_matrix(a, std::vector<double>(n - 1, 1.0), 1);
            pair.e_matrix = Matrix::identity(n) - bands.s * k1 - bands.k * s1;
            // F5 = L I + F - (S_a + K_b) I + S_a (L' I + F) + K_b (L I + F'),
            // with L' = L - K1 and F' = F - S1 I.
            Tensor f_prime = rest;
            add_matrix_on_majorization(f_prime, s1, -1.0);
            pair.f_tensor = rest;
            add_matrix_on_majorization(pair.f_tensor, low);
            add_matrix_on_majorization(pair.f_tensor, bands.s, -1.0);
            add_matrix_on_majorization(pair.f_tensor, bands.k, -1.0);
            pair.f_tensor += matrix_tensor_product(bands.s, rest);
            add_matrix_on_majorization(pair.f_tensor, bands.s * (low - k1));
            pair.f_tensor += matrix_tensor_product(bands.k, f_prime);
            add_matrix_on_majorization(pair.f_tensor, bands.k * low);
            break;
        }
        case SplittingFamily::GaussSeidelM1: {
            // M1 = (P(I - L)) I, N1 = P F
            pair.e_matrix = bands.p * (Matrix::identity(n) - low);
            pair.f_tensor = matrix_tensor_product(bands.p, rest);
            break;
        }
        case SplittingFamily::GaussSeidelM2:
        case SplittingFamily::GaussSeidelM3:
        case SplittingFamily::GaussSeidelM4:
        case SplittingFamily::PrecondSor: {
            // Parts of S_a^s L = D_a I + L_a I + F_a and K_b^k F = D_b I + L_b I + F_b.
            const AdditiveDlf sl =
                additive_dlf(matrix_times_identity(bands.s * low, m));
            const AdditiveDlf kf = additive_dlf(matrix_tensor_product(bands.k, rest));

            const Matrix d_ab = Matrix::identity(n) - sl.diag - kf.diag;
            Matrix l_ab = low - bands.k + bands.k * low;
            l_ab += sl.lower;
            l_ab += kf.lower;
            Tensor f_ab = rest;
            add_matrix_on_majorization(f_ab, bands.s, -1.0);
            f_ab += matrix_tensor_product(bands.s, rest);
            f_ab += sl.rest;
            f_ab += kf.rest;

            if (v.family == SplittingFamily::PrecondSor) {
                pair.e_matrix = d_ab - l_ab * v.omega;
                pair.e_matrix *= 1.0 / v.omega;
                pair.f_tensor = std::move(f_ab);
                add_matrix_on_majorization(pair.f_tensor,
                                           d_ab * ((1.0 - v.omega) / v.omega));
            } else {
                // M2/M3/M4 are the omega = 1 assembly; for M3 the K band is
                // empty and for M4 the S band is empty, which reduces the
                // expressions to the printed forms.
                pair.e_matrix = d_ab - l_ab;
                pair.f_tensor = std::move(f_ab);
            }
            break;
        }
        case SplittingFamily::GaussSeidelM5: {
            const Matrix k1 = lower_band_matrix(a, std::vector<double>(n - 1, 1.0), 1);
            const Matrix s1 = upper_band_matrix(a, std::vector<double>(n - 1, 1.0), 1);
            // M5 = ((I + K_b)(I - L) - S_a L - K_b S) I
            pair.e_matrix = (Matrix::identity(n) + bands.k) * (Matrix::identity(n) - low) -
                            bands.s * low - bands.k * s1;
            // N5 = (I + S_a) F - S_a I + K_b F'
            Tensor f_prime = rest;
            add_matrix_on_majorization(f_prime, s1, -1.0);
            pair.f_tensor = rest;
            pair.f_tensor += matrix_tensor_product(bands.s, rest);
            add_matrix_on_majorization(pair.f_tensor, bands.s, -1.0);
            pair.f_tensor += matrix_tensor_product(bands.k, f_prime);
            break;
        }
        default:
            throw VariantDomainError("unhandled splitting family");
    }

    check_reconstruction(pair);
    return pair;
}

SplitPair make_classical_splitting(const Tensor& a, ClassicalKind kind, double omega) {
    const SplitDlf dlf = split_dlf(a);
    SplitPair pair;
    pair.preconditioned_tensor = a;
    switch (kind) {
        case ClassicalKind::Jacobi:
            pair.variant = {SplittingFamily::JacobiE1, 1.0};
            pair.e_matrix = dlf.diag;
            pair.f_tensor = dlf.rest;
            add_matrix_on_majorization(pair.f_tensor, dlf.lower);
            break;
        case ClassicalKind::GaussSeidel:
            pair.variant = {SplittingFamily::GaussSeidelM1, 1.0};
            pair.e_matrix = dlf.diag - dlf.lower;
            pair.f_tensor = dlf.rest;
            break;
        case ClassicalKind::Sor:
            if (!(omega > 0.0 && omega < 2.0))
                throw VariantDomainError("SOR relaxation parameter must lie in (0,2)");
            pair.variant = {SplittingFamily::Sor, omega};
            pair.e_matrix = dlf.diag - dlf.lower * omega;
            pair.e_matrix *= 1.0 / omega;
            pair.f_tensor = dlf.rest;
            add_matrix_on_majorization(pair.f_tensor, dlf.diag * ((1.0 - omega) / omega));
            break;
    }
    check_reconstruction(pair);
    return pair;
}

Tensor iteration_tensor(const SplitPair& split) {
    const LuFactorization lu = LuFactorization::compute(split.e_matrix);
    Tensor t = split.f_tensor;
    lu.solve_rows(t.data().data(), t.slice_size());
    return t;
}

}  // namespace msplit
