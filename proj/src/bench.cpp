#include "msplit/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"
#include "msplit/precondition.hpp"

namespace msplit {

namespace {

ExampleSystem finish(Tensor a, Vector b) {
    ExampleSystem sys;
    auto [an, bn] = normalize_system(a, b);
    sys.a = std::move(a);
    sys.b = std::move(b);
    sys.a_normalized = std::move(an);
    sys.b_normalized = std::move(bn);
    return sys;
}

ExampleSystem make_example1() {
    // 3x3x3 strong M-tensor, listed by slices a(:,:,i3).
    const double s1[9] = {1.00, -0.01, -0.02, -0.02, -0.03, -0.04, -0.04, -0.05, -0.06};
    const double s2[9] = {-0.06, -0.07, -0.08, -0.08, 1.00, -0.09, -0.01, -0.02, -0.03};
    const double s3[9] = {-0.03, -0.04, -0.05, -0.05, -0.06, -0.07, -0.07, -0.08, 1.00};
    Tensor a(3, 3);
    const double* slices[3] = {s1, s2, s3};
    for (int i3 = 0; i3 < 3; ++i3)
        for (int i1 = 0; i1 < 3; ++i1)
            for (int i2 = 0; i2 < 3; ++i2) {
                const int idx[3] = {i1, i2, i3};
                a.at(idx) = slices[i3][i1 * 3 + i2];
            }
    return finish(std::move(a), Vector(3, 1.0));
}

ExampleSystem make_example2(int n) {
    if (n < 2) throw ConfigError("example 2 needs n >= 2");
    // B has majorization hilb(n) plus four 1/3 entries per row; assembled
    // sparsely so an accidental overlap with a majorization slot aborts
    // instead of summing silently.
    std::map<std::size_t, double> entries;
    Tensor b_tensor(3, n);
    auto put = [&](int i1, int i2, int i3, double value) {
        const int idx[3] = {i1, i2, i3};
        const std::size_t flat = b_tensor.flatten(idx);
        if (!entries.emplace(flat, value).second)
            throw ConfigError("example 2: conflicting entry assignment");
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) put(i, j, j, 1.0 / (i + j + 1));
    for (int i = 1; i < n; ++i) {  // 1-based rows 2..n; out-of-range columns dropped
        put(i, i - 1, i, 1.0 / 3.0);
        put(i, i, i - 1, 1.0 / 3.0);
        if (i + 1 < n) {
            put(i, i + 1, i, 1.0 / 3.0);
            put(i, i, i + 1, 1.0 / 3.0);
        }
    }
    for (const auto& [flat, value] : entries) b_tensor[flat] = value;

    Tensor a = b_tensor;
    a *= -0.01;
    for (int i = 0; i < n; ++i)
        a.majorization_entry(i, i) += static_cast<double>(n) * n;
    return finish(std::move(a), Vector(n, 1.0));
}

ExampleSystem make_example3() {
    const int n = 10;
    Tensor a(3, n);
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3) {
                const int idx[3] = {i1, i2, i3};
                a.at(idx) = -std::abs(std::tan(i1 + i2 + i3 + 3.0));
            }
    for (int i = 0; i < n; ++i) a.majorization_entry(i, i) += 2000.0;
    return finish(std::move(a), Vector(n, 1.0));
}

SplittingFamily family_of(BenchMethod m) {
    switch (m) {
        case BenchMethod::E1F1: return SplittingFamily::JacobiE1;
        case BenchMethod::E2F2: return SplittingFamily::JacobiE2;
        case BenchMethod::E3F3: return SplittingFamily::JacobiE3;
        case BenchMethod::E4F4: return SplittingFamily::JacobiE4;
        case BenchMethod::E5F5: return SplittingFamily::JacobiE5;
        case BenchMethod::M1N1: return SplittingFamily::GaussSeidelM1;
        case BenchMethod::M2N2: return SplittingFamily::GaussSeidelM2;
        case BenchMethod::M3N3: return SplittingFamily::GaussSeidelM3;
        case BenchMethod::M4N4: return SplittingFamily::GaussSeidelM4;
        case BenchMethod::M5N5: return SplittingFamily::GaussSeidelM5;
        case BenchMethod::Sor: return SplittingFamily::Sor;
        case BenchMethod::Psor: return SplittingFamily::PrecondSor;
        default: throw ConfigError("baseline methods have no banded splitting family");
    }
}

}  // namespace

ExampleSystem generate_example(const ExampleSpec& spec) {
    switch (spec.id) {
        case 1:
            if (spec.n != 0 && spec.n != 3) throw ConfigError("example 1 fixes n = 3");
            return make_example1();
        case 2:
            return make_example2(spec.n == 0 ? 30 : spec.n);
        case 3:
            if (spec.n != 0 && spec.n != 10) throw ConfigError("example 3 fixes n = 10");
            return make_example3();
        default:
            throw ConfigError("example id must be 1, 2 or 3");
    }
}

std::string to_string(BenchMethod m) {
    switch (m) {
        case BenchMethod::E1F1: return "e1f1";
        case BenchMethod::E2F2: return "e2f2";
        case BenchMethod::E3F3: return "e3f3";
        case BenchMethod::E4F4: return "e4f4";
        case BenchMethod::E5F5: return "e5f5";
        case BenchMethod::M1N1: return "m1n1";
        case BenchMethod::M2N2: return "m2n2";
        case BenchMethod::M3N3: return "m3n3";
        case BenchMethod::M4N4: return "m4n4";
        case BenchMethod::M5N5: return "m5n5";
        case BenchMethod::Sor: return "sor";
        case BenchMethod::Psor: return "psor";
        case BenchMethod::PjBaseline: return "pj-baseline";
        case BenchMethod::PgsBaseline: return "pgs-baseline";
        case BenchMethod::PsorBaseline: return "psor-baseline";
    }
    return "e2f2";
}

BenchMethod bench_method_from_string(const std::string& name) {
    static const std::map<std::string, BenchMethod> lookup = {
        {"e1f1", BenchMethod::E1F1},
        {"e2f2", BenchMethod::E2F2},
        {"e3f3", BenchMethod::E3F3},
        {"e4f4", BenchMethod::E4F4},
        {"e5f5", BenchMethod::E5F5},
        {"m1n1", BenchMethod::M1N1},
        {"m2n2", BenchMethod::M2N2},
        {"m3n3", BenchMethod::M3N3},
        {"m4n4", BenchMethod::M4N4},
        {"m5n5", BenchMethod::M5N5},
        {"sor", BenchMethod::Sor},
        {"psor", BenchMethod::Psor},
        {"pj-baseline", BenchMethod::PjBaseline},
        {"pgs-baseline", BenchMethod::PgsBaseline},
        {"psor-baseline", BenchMethod::PsorBaseline},
    };
    const auto it = lookup.find(name);
    if (it == lookup.end()) throw ConfigError("unknown method: " + name);
    return it->second;
}

bool bench_method_uses_omega(BenchMethod m) {
    return m == BenchMethod::Sor || m == BenchMethod::Psor || m == BenchMethod::PsorBaseline;
}

SolveResult solve_with_method(const ExampleSystem& sys, BenchMethod method,
                              const ParamPoint& p, const SolveOptions& opts) {
    const int n = sys.a.dim();

    // Baselines follow the cited constructions: the band is drawn from the
    // raw tensor and the classical splitting is applied to the raw
    // preconditioned system.
    if (method == BenchMethod::PjBaseline || method == BenchMethod::PgsBaseline ||
        method == BenchMethod::PsorBaseline) {
        Matrix pre = Matrix::identity(n);
        if (method == BenchMethod::PsorBaseline)
            pre += first_column_matrix(sys.a, std::vector<double>(n - 1, p.beta));
        else
            pre += upper_band_matrix(sys.a, std::vector<double>(n - 1, p.alpha), 1);
        auto [pa, pb] = precondition(pre, sys.a, sys.b);
        const ClassicalKind kind = method == BenchMethod::PjBaseline ? ClassicalKind::Jacobi
                                   : method == BenchMethod::PgsBaseline
                                       ? ClassicalKind::GaussSeidel
                                       : ClassicalKind::Sor;
        const SplitPair split = make_classical_splitting(pa, kind, p.omega);
        return solve(split, pb, sys.a, sys.b, opts);
    }

    const SplittingFamily family = family_of(method);
    SplittingVariant variant{family, p.omega};

    PreconditionerSpec spec;
    switch (method) {
        case BenchMethod::E3F3:
        case BenchMethod::M3N3:
            spec = PreconditionerSpec::upper_only(p.alpha, p.s, n);
            break;
        case BenchMethod::E4F4:
        case BenchMethod::M4N4:
            spec = PreconditionerSpec::lower_only(p.beta, p.k, n);
            break;
        case BenchMethod::E5F5:
        case BenchMethod::M5N5:
            // Defined for s = k = 1 only.
            spec = PreconditionerSpec::full_band(p.alpha, p.beta, 1, 1, n);
            break;
        default:
            spec = PreconditionerSpec::full_band(p.alpha, p.beta, p.s, p.k, n);
            break;
    }

    const SplitPair split = make_splitting(sys.a_normalized, spec, variant);
    Vector rhs = sys.b_normalized;
    if (family != SplittingFamily::Sor) {
        const Matrix pre = build_preconditioner(spec, sys.a_normalized);
        rhs = pre.apply(sys.b_normalized);
    }
    return solve(split, rhs, sys.a, sys.b, opts);
}

std::vector<BenchmarkRow> run_benchmark(const ExampleSystem& system,
                                        const std::vector<BenchMethod>& methods,
                                        const std::vector<ParamPoint>& grid,
                                        const SolveOptions& opts) {
    std::vector<BenchmarkRow> rows;
    rows.reserve(methods.size() * grid.size());
    for (const ParamPoint& p : grid) {
        for (const BenchMethod method : methods) {
            BenchmarkRow row;
            row.method = to_string(method);
            row.alpha = p.alpha;
            row.beta = p.beta;
            row.s = p.s;
            row.k = p.k;
            row.has_omega = bench_method_uses_omega(method);
            row.omega = row.has_omega ? p.omega : 0.0;
            try {
                const SolveResult res = solve_with_method(system, method, p, opts);
                row.iterations = res.report.iterations;
                row.time_s = res.report.elapsed_seconds;
                row.converged = res.report.status == SolveStatus::Converged;
                row.status = to_string(res.report.status);
            } catch (const Error& e) {
                row.status = std::string("error:") + e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string render_csv(const std::vector<BenchmarkRow>& rows) {
    std::ostringstream out;
    out << "method,alpha,beta,s,k,omega,iterations,time_s,status\n";
    for (const BenchmarkRow& r : rows) {
        out << r.method << ',' << r.alpha << ',' << r.beta << ',' << r.s << ',' << r.k << ',';
        if (r.has_omega) out << r.omega;
        out << ',' << r.iterations << ',' << r.time_s << ',';
        if (r.converged)
            out << "converged";
        else if (r.status.rfind("error:", 0) == 0)
            out << "error";
        else
            out << "max_iterations";
        out << '\n';
    }
    return out.str();
}

std::string render_markdown(const std::vector<BenchmarkRow>& rows,
                            const std::vector<std::string>& method_order) {
    std::ostringstream out;
    out << "| alpha | beta | s | k | omega |";
    for (const auto& m : method_order) out << ' ' << m << " |";
    out << "\n|---|---|---|---|---|";
    for (std::size_t i = 0; i < method_order.size(); ++i) out << "---|";
    out << '\n';

    const std::size_t cols = method_order.size();
    for (std::size_t base = 0; base + cols <= rows.size(); base += cols) {
        const BenchmarkRow& first = rows[base];
        out << "| " << first.alpha << " | " << first.beta << " | " << first.s << " | "
            << first.k << " | ";
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[base + j].has_omega) {
                out << rows[base + j].omega;
                break;
            }
        }
        out << " |";
        for (std::size_t j = 0; j < cols; ++j) {
            const BenchmarkRow& r = rows[base + j];
            if (r.converged)
                out << ' ' << r.iterations << " (" << r.time_s << "s) |";
            else
                out << " \xe2\x80\xa0 |";
        }
        out << '\n';
    }
    return out.str();
}

std::string render_json(const std::vector<BenchmarkRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BenchmarkRow& r : rows) {
        nlohmann::json j{{"method", r.method},   {"alpha", r.alpha}, {"beta", r.beta},
                         {"s", r.s},             {"k", r.k},         {"iterations", r.iterations},
                         {"time_s", r.time_s},   {"status", r.status},
                         {"converged", r.converged}};
        if (r.has_omega) j["omega"] = r.omega;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::vector<double> parse_sweep(const std::string& text) {
    double lo = 0.0, step = 0.0, hi = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> step >> c2 >> hi) || c1 != ':' || c2 != ':')
        throw ConfigError("sweep must be LO:STEP:HI");
    if (!(step > 0.0)) throw ConfigError("sweep step must be > 0");
    std::vector<double> values;
    for (double v = lo; v <= hi + 1e-9 * step; v += step) values.push_back(v);
    return values;
}

}  // namespace msplit
