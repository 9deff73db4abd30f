// msplit: solve, benchmark and inspect multilinear systems A x^{m-1} = b
// with banded-preconditioner tensor splitting iterations.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "msplit/bench.hpp"
#include "msplit/io.hpp"
#include "msplit/precondition.hpp"
#include "msplit/solver.hpp"
#include "msplit/spectral.hpp"

using nlohmann::json;
using namespace msplit;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw FormatError("cannot write " + out_path);
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }
}

int run_solve(const std::string& tensor_path, const std::string& rhs_path,
              const std::string& method_name, double alpha, double beta, int s, int k,
              double omega, double tol, int max_iter, const std::string& out_path) {
    const Tensor a = load_tensor(tensor_path);
    const Vector b = load_vector(rhs_path);
    const BenchMethod method = bench_method_from_string(method_name);

    ExampleSystem sys;
    sys.a = a;
    sys.b = b;
    auto [an, bn] = normalize_system(a, b);
    sys.a_normalized = std::move(an);
    sys.b_normalized = std::move(bn);

    SolveOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    const ParamPoint point{alpha, beta, s, k, omega};
    const SolveResult res = solve_with_method(sys, method, point, opts);

    json j = solve_report_to_json(res.report);
    j["method"] = method_name;
    j["parameters"] = {{"alpha", alpha}, {"beta", beta}, {"s", s}, {"k", k}, {"omega", omega}};
    j["x"] = res.x;
    emit(j.dump(2), out_path);
    return res.report.status == SolveStatus::Converged ? 0 : 2;
}

int run_bench(int example_id, int n, const std::string& methods_csv,
              const std::string& alpha_sweep, const std::string& beta_sweep,
              const std::string& omega_sweep, int s, int k, const std::string& format,
              double tol, int max_iter, const std::string& out_path) {
    std::vector<BenchMethod> methods;
    std::vector<std::string> method_names;
    {
        std::stringstream ss(methods_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            methods.push_back(bench_method_from_string(item));
            method_names.push_back(item);
        }
    }
    if (methods.empty()) throw ConfigError("no methods given");

    const std::vector<double> alphas =
        alpha_sweep.empty() ? std::vector<double>{0.0} : parse_sweep(alpha_sweep);
    const std::optional<std::vector<double>> betas =
        beta_sweep.empty() ? std::nullopt : std::make_optional(parse_sweep(beta_sweep));
    const std::vector<double> omegas =
        omega_sweep.empty() ? std::vector<double>{1.2} : parse_sweep(omega_sweep);

    std::vector<ParamPoint> grid;
    for (double a : alphas)
        for (double b : betas ? *betas : std::vector<double>{a})  // beta follows alpha unless swept
            for (double w : omegas) grid.push_back({a, b, s, k, w});

    SolveOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    const ExampleSystem sys = generate_example({example_id, n});
    const std::vector<BenchmarkRow> rows = run_benchmark(sys, methods, grid, opts);

    std::string text;
    if (format == "csv")
        text = render_csv(rows);
    else if (format == "md")
        text = render_markdown(rows, method_names);
    else if (format == "json")
        text = render_json(rows);
    else
        throw ConfigError("format must be csv, md or json");
    emit(text, out_path);
    return 0;
}

int run_rho(const std::string& tensor_path, double tol, int max_iter,
            const std::string& out_path) {
    const Tensor t = load_tensor(tensor_path);
    const SpectralEstimate est = spectral_radius(t, tol, max_iter);
    emit(spectral_estimate_to_json(est).dump(2), out_path);
    return est.converged ? 0 : 2;
}

int run_check(const std::string& tensor_path, double alpha, double beta, int s, int k,
              bool have_params, bool banded, const std::string& out_path) {
    const Tensor t = load_tensor(tensor_path);
    json j;
    j["classification"] = classification_to_json(classify(t, true));
    if (have_params) {
        const Vector ones(t.dim(), 1.0);
        auto [tn, bn] = normalize_system(t, ones);
        const PreconditionerSpec spec =
            PreconditionerSpec::full_band(alpha, beta, s, k, t.dim());
        j["conditions"] = condition_report_to_json(check_conditions(tn, spec, banded));
        j["preconditioner"] = preconditioner_spec_to_json(spec);
    }
    emit(j.dump(2), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tensor splitting solvers for multilinear systems with M-tensors"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve A x^{m-1} = b from tensor/vector files");
    std::string tensor_path, rhs_path, out_path;
    std::string method = "e2f2";
    double alpha = 0.0, beta = 0.0, omega = 1.2, tol = 1e-12;
    int s = 1, k = 1, max_iter = 2000;
    solve_cmd->add_option("--tensor", tensor_path, "coefficient tensor file")->required();
    solve_cmd->add_option("--rhs", rhs_path, "right-hand side vector file")->required();
    solve_cmd->add_option("--method", method, "one of e1f1..e5f5, m1n1..m5n5, sor, psor, pj-baseline, pgs-baseline, psor-baseline");
    solve_cmd->add_option("--alpha", alpha, "upper band parameter (broadcast)");
    solve_cmd->add_option("--beta", beta, "lower band parameter (broadcast)");
    solve_cmd->add_option("--s", s, "upper band offset");
    solve_cmd->add_option("--k", k, "lower band offset");
    solve_cmd->add_option("--omega", omega, "SOR relaxation parameter");
    solve_cmd->add_option("--tol", tol, "residual threshold");
    solve_cmd->add_option("--max-iter", max_iter, "iteration cap");
    solve_cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "reproduce the benchmark tables");
    int example_id = 1, bench_n = 0, bench_s = 1, bench_k = 1, bench_max_iter = 2000;
    std::string methods = "e2f2,m2n2,psor";
    std::string alpha_sweep, beta_sweep, omega_sweep, format = "csv", bench_out;
    double bench_tol = 1e-12;
    bench_cmd->add_option("--example", example_id, "example id: 1, 2 or 3")->required();
    bench_cmd->add_option("--n", bench_n, "dimension (example 2 only)");
    bench_cmd->add_option("--methods", methods, "comma-separated method list");
    bench_cmd->add_option("--alpha-sweep", alpha_sweep, "LO:STEP:HI");
    bench_cmd->add_option("--beta-sweep", beta_sweep, "LO:STEP:HI (defaults to beta = alpha)");
    bench_cmd->add_option("--omega-sweep", omega_sweep, "LO:STEP:HI (default fixed 1.2)");
    bench_cmd->add_option("--s", bench_s, "upper band offset");
    bench_cmd->add_option("--k", bench_k, "lower band offset");
    bench_cmd->add_option("--format", format, "csv, md or json");
    bench_cmd->add_option("--tol", bench_tol, "residual threshold");
    bench_cmd->add_option("--max-iter", bench_max_iter, "iteration cap");
    bench_cmd->add_option("--out", bench_out, "output file (default stdout)");

    // rho
    auto* rho_cmd = app.add_subcommand("rho", "Perron radius of a nonnegative tensor");
    std::string rho_tensor, rho_out;
    double rho_tol = 1e-10;
    int rho_max_iter = 10000;
    rho_cmd->add_option("--tensor", rho_tensor, "tensor file")->required();
    rho_cmd->add_option("--tol", rho_tol, "relative bracket width");
    rho_cmd->add_option("--max-iter", rho_max_iter, "iteration cap");
    rho_cmd->add_option("--out", rho_out, "output file (default stdout)");

    // check
    auto* check_cmd = app.add_subcommand("check", "Z / strong-M classification and convergence conditions");
    std::string check_tensor, check_out;
    double check_alpha = 0.0, check_beta = 0.0;
    int check_s = 1, check_k = 1;
    bool banded = false;
    check_cmd->add_option("--tensor", check_tensor, "tensor file")->required();
    auto* oa = check_cmd->add_option("--alpha", check_alpha, "upper band parameter");
    auto* ob = check_cmd->add_option("--beta", check_beta, "lower band parameter");
    auto* os = check_cmd->add_option("--s", check_s, "upper band offset");
    auto* ok = check_cmd->add_option("--k", check_k, "lower band offset");
    check_cmd->add_flag("--banded", banded, "banded reading of the k != s conditions");
    check_cmd->add_option("--out", check_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed())
            return run_solve(tensor_path, rhs_path, method, alpha, beta, s, k, omega, tol,
                             max_iter, out_path);
        if (bench_cmd->parsed())
            return run_bench(example_id, bench_n, methods, alpha_sweep, beta_sweep,
                             omega_sweep, bench_s, bench_k, format, bench_tol,
                             bench_max_iter, bench_out);
        if (rho_cmd->parsed()) return run_rho(rho_tensor, rho_tol, rho_max_iter, rho_out);
        if (check_cmd->parsed()) {
            const bool have = oa->count() || ob->count() || os->count() || ok->count();
            return run_check(check_tensor, check_alpha, check_beta, check_s, check_k, have,
                             banded, check_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
