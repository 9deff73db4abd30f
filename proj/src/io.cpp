#include "msplit/io.hpp"

#include <cmath>
#include <fstream>
#include <map>

using nlohmann::json;

namespace msplit {

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << j.dump(2) << '\n';
}

void require_finite(const std::vector<double>& values, const std::string& what) {
    for (double v : values)
        if (!std::isfinite(v)) throw FormatError(what + ": non-finite entry");
}

std::vector<double> broadcast_param(const json& j, std::size_t len, const char* name) {
    if (j.is_number()) return std::vector<double>(len, j.get<double>());
    if (j.is_array()) {
        auto v = j.get<std::vector<double>>();
        if (v.size() == 1) return std::vector<double>(len, v[0]);
        if (v.size() != len)
            throw FormatError(std::string(name) + ": expected " + std::to_string(len) +
                              " entries, got " + std::to_string(v.size()));
        return v;
    }
    throw FormatError(std::string(name) + ": expected number or array");
}

}  // namespace

Tensor tensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("dim"))
        throw FormatError("tensor: expected object with order/dim");
    const int m = j.at("order").get<int>();
    const int n = j.at("dim").get<int>();
    if (m < 2 || n < 1) throw FormatError("tensor: order must be >= 2 and dim >= 1");

    if (j.contains("entries")) {
        auto entries = j.at("entries").get<std::vector<double>>();
        Tensor t(m, n);
        if (entries.size() != t.size())
            throw FormatError("tensor: expected " + std::to_string(t.size()) +
                              " entries, got " + std::to_string(entries.size()));
        require_finite(entries, "tensor");
        return Tensor(m, n, std::move(entries));
    }

    if (j.contains("coo")) {
        Tensor t(m, n);
        std::map<std::size_t, bool> seen;
        for (const auto& row : j.at("coo")) {
            if (!row.is_array() || static_cast<int>(row.size()) != m + 1)
                throw FormatError("tensor coo: each row needs m indices and a value");
            std::vector<int> idx(m);
            for (int q = 0; q < m; ++q) {
                const int one_based = row[q].get<int>();
                if (one_based < 1 || one_based > n)
                    throw FormatError("tensor coo: index out of range");
                idx[q] = one_based - 1;
            }
            const double value = row[m].get<double>();
            if (!std::isfinite(value)) throw FormatError("tensor coo: non-finite value");
            const std::size_t flat = t.flatten(idx);
            if (seen.count(flat))
                throw DuplicateEntryError("tensor coo: duplicate index tuple");
            seen[flat] = true;
            t[flat] = value;
        }
        return t;
    }

    throw FormatError("tensor: expected 'entries' or 'coo'");
}

json tensor_to_json(const Tensor& t) {
    return json{{"order", t.order()}, {"dim", t.dim()}, {"entries", t.data()}};
}

Tensor load_tensor(const std::string& path) { return tensor_from_json(parse_file(path)); }

void store_tensor(const Tensor& t, const std::string& path) {
    write_file(path, tensor_to_json(t));
}

Vector vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw FormatError("vector: expected object with dim/entries");
    const int n = j.at("dim").get<int>();
    auto entries = j.at("entries").get<std::vector<double>>();
    if (static_cast<int>(entries.size()) != n)
        throw FormatError("vector: entry count does not match dim");
    require_finite(entries, "vector");
    return entries;
}

json vector_to_json(const Vector& v) {
    return json{{"dim", v.size()}, {"entries", v}};
}

Vector load_vector(const std::string& path) { return vector_from_json(parse_file(path)); }

void store_vector(const Vector& v, const std::string& path) {
    write_file(path, vector_to_json(v));
}

PreconditionerSpec preconditioner_spec_from_json(const json& j, int n) {
    PreconditionerSpec spec;
    spec.variant = preconditioner_variant_from_string(
        j.value("variant", std::string("full_band")));
    spec.s = j.value("s", 1);
    spec.k = j.value("k", 1);
    if (spec.variant == PreconditionerVariant::BaselineRow) spec.s = 1;

    const int alpha_len = n - (spec.variant == PreconditionerVariant::BaselineRow ? 1 : spec.s);
    const int beta_len =
        (spec.variant == PreconditionerVariant::BaselineColumn) ? n - 1 : n - spec.k;
    if (j.contains("alpha")) spec.alpha = broadcast_param(j.at("alpha"), alpha_len, "alpha");
    if (j.contains("beta")) spec.beta = broadcast_param(j.at("beta"), beta_len, "beta");

    // Default missing parameters to zero bands of the right length.
    const bool needs_alpha = spec.variant == PreconditionerVariant::FullBand ||
                             spec.variant == PreconditionerVariant::UpperOnly ||
                             spec.variant == PreconditionerVariant::BaselineRow;
    const bool needs_beta = spec.variant != PreconditionerVariant::UpperOnly &&
                            spec.variant != PreconditionerVariant::BaselineRow;
    if (needs_alpha && spec.alpha.empty()) spec.alpha.assign(alpha_len, 0.0);
    if (needs_beta && spec.beta.empty()) spec.beta.assign(beta_len, 0.0);
    return spec;
}

json preconditioner_spec_to_json(const PreconditionerSpec& spec) {
    return json{{"variant", to_string(spec.variant)},
                {"alpha", spec.alpha},
                {"beta", spec.beta},
                {"s", spec.s},
                {"k", spec.k},
                {"theory_range", spec.theory_range()}};
}

json solve_report_to_json(const SolveReport& report) {
    return json{{"status", to_string(report.status)},
                {"iterations", report.iterations},
                {"residual_history", report.residual_history},
                {"elapsed_seconds", report.elapsed_seconds}};
}

json spectral_estimate_to_json(const SpectralEstimate& est) {
    return json{{"rho", est.rho},
                {"lower", est.lower},
                {"upper", est.upper},
                {"iterations", est.iterations},
                {"converged", est.converged},
                {"shifted", est.shifted},
                {"shift_epsilon", est.shift_epsilon}};
}

json classification_to_json(const Classification& c) {
    json j{{"is_z", c.is_z},
           {"is_strong_m", c.is_strong_m},
           {"eta", c.eta},
           {"rho_b", c.rho_b},
           {"rho_bracket", {c.rho_lower, c.rho_upper}}};
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (c.positive_certificate) j["positive_certificate"] = *c.positive_certificate;
    return j;
}

json condition_report_to_json(const ConditionReport& report) {
    return json{{"condition", to_string(report.condition_id)},
                {"values", report.values},
                {"satisfied", report.satisfied},
                {"banded_interpretation", report.banded_interpretation}};
}

}  // namespace msplit
