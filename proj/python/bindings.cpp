#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msplit/bench.hpp"
#include "msplit/io.hpp"
#include "msplit/precondition.hpp"
#include "msplit/solver.hpp"
#include "msplit/spectral.hpp"

namespace py = pybind11;
using namespace msplit;

namespace {

Tensor tensor_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> arr) {
    const auto info = arr.request();
    if (info.ndim < 2) throw DimensionError("tensor arrays need at least 2 dimensions");
    const int m = static_cast<int>(info.ndim);
    const int n = static_cast<int>(info.shape[0]);
    for (int d = 0; d < m; ++d)
        if (info.shape[d] != n) throw DimensionError("tensor arrays must be hypercubic");
    const double* data = static_cast<const double*>(info.ptr);
    return Tensor(m, n, std::vector<double>(data, data + arr.size()));
}

py::array_t<double> tensor_to_array(const Tensor& t) {
    std::vector<py::ssize_t> shape(t.order(), t.dim());
    py::array_t<double> arr(shape);
    std::copy(t.data().begin(), t.data().end(), static_cast<double*>(arr.request().ptr));
    return arr;
}

Matrix matrix_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> arr) {
    const auto info = arr.request();
    if (info.ndim != 2 || info.shape[0] != info.shape[1])
        throw DimensionError("expected a square 2-d array");
    const int n = static_cast<int>(info.shape[0]);
    Matrix m(n);
    const double* data = static_cast<const double*>(info.ptr);
    std::copy(data, data + static_cast<std::size_t>(n) * n, m.data().begin());
    return m;
}

py::array_t<double> matrix_to_array(const Matrix& m) {
    py::array_t<double> arr({m.dim(), m.dim()});
    std::copy(m.data().begin(), m.data().end(), static_cast<double*>(arr.request().ptr));
    return arr;
}

PreconditionerSpec spec_from_kwargs(const std::string& variant, py::object alpha,
                                    py::object beta, int s, int k, int n) {
    nlohmann::json j;
    j["variant"] = variant;
    j["s"] = s;
    j["k"] = k;
    auto to_json_param = [](py::object o) -> nlohmann::json {
        if (py::isinstance<py::float_>(o) || py::isinstance<py::int_>(o))
            return o.cast<double>();
        return o.cast<std::vector<double>>();
    };
    if (!alpha.is_none()) j["alpha"] = to_json_param(alpha);
    if (!beta.is_none()) j["beta"] = to_json_param(beta);
    return preconditioner_spec_from_json(j, n);
}

py::dict report_to_dict(const SolveReport& r) {
    py::dict d;
    d["status"] = to_string(r.status);
    d["iterations"] = r.iterations;
    d["residual_history"] = r.residual_history;
    d["elapsed_seconds"] = r.elapsed_seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "tensor splitting solvers for multilinear systems with M-tensors";

    py::register_exception<DimensionError>(m, "DimensionError");
    py::register_exception<NormalizationError>(m, "NormalizationError");
    py::register_exception<NegativeRadicandError>(m, "NegativeRadicandError");
    py::register_exception<SingularEMatrixError>(m, "SingularEMatrixError");
    py::register_exception<VariantDomainError>(m, "VariantDomainError");
    py::register_exception<NotNonnegativeError>(m, "NotNonnegativeError");
    py::register_exception<DuplicateEntryError>(m, "DuplicateEntryError");
    py::register_exception<FormatError>(m, "FormatError");
    py::register_exception<ConfigError>(m, "ConfigError");

    py::class_<Tensor>(m, "Tensor", py::buffer_protocol())
        .def(py::init(&tensor_from_array), py::arg("array"))
        .def_property_readonly("order", &Tensor::order)
        .def_property_readonly("dim", &Tensor::dim)
        .def("to_numpy", &tensor_to_array)
        .def_buffer([](Tensor& t) {
            std::vector<py::ssize_t> shape(t.order(), t.dim());
            std::vector<py::ssize_t> strides(t.order());
            py::ssize_t stride = sizeof(double);
            for (int d = t.order() - 1; d >= 0; --d) {
                strides[d] = stride;
                stride *= t.dim();
            }
            return py::buffer_info(t.data().data(), sizeof(double),
                                   py::format_descriptor<double>::format(), t.order(),
                                   shape, strides);
        });

    py::class_<SplitPair>(m, "SplitPair")
        .def_property_readonly("e_matrix",
                               [](const SplitPair& p) { return matrix_to_array(p.e_matrix); })
        .def_property_readonly("f_tensor",
                               [](const SplitPair& p) { return tensor_to_array(p.f_tensor); })
        .def_property_readonly("preconditioned_tensor",
                               [](const SplitPair& p) {
                                   return tensor_to_array(p.preconditioned_tensor);
                               })
        .def_property_readonly("family", [](const SplitPair& p) {
            return to_string(p.variant.family);
        });

    m.def("identity_tensor", &identity_tensor, py::arg("order"), py::arg("dim"));
    m.def("contract", [](const Tensor& a, const Vector& x) { return contract(a, x); });
    m.def("matrix_tensor_product", [](py::array_t<double> mat, const Tensor& b) {
        return matrix_tensor_product(matrix_from_array(mat), b);
    });
    m.def("majorization", [](const Tensor& a) { return matrix_to_array(majorization(a)); });
    m.def("elementwise_root", &elementwise_root, py::arg("v"), py::arg("order"));
    m.def("split_dlf", [](const Tensor& a) {
        const SplitDlf d = split_dlf(a);
        return py::make_tuple(matrix_to_array(d.diag), matrix_to_array(d.lower),
                              tensor_to_array(d.rest));
    });

    m.def("normalize_system", [](const Tensor& a, const Vector& b) {
        auto [an, bn] = normalize_system(a, b);
        return py::make_tuple(an, bn);
    });
    m.def(
        "build_preconditioner",
        [](const Tensor& a, const std::string& variant, py::object alpha, py::object beta,
           int s, int k) {
            const PreconditionerSpec spec =
                spec_from_kwargs(variant, alpha, beta, s, k, a.dim());
            return matrix_to_array(build_preconditioner(spec, a));
        },
        py::arg("a"), py::arg("variant") = "full_band", py::arg("alpha") = py::none(),
        py::arg("beta") = py::none(), py::arg("s") = 1, py::arg("k") = 1);
    m.def("precondition", [](py::array_t<double> p, const Tensor& a, const Vector& b) {
        auto [pa, pb] = precondition(matrix_from_array(p), a, b);
        return py::make_tuple(pa, pb);
    });
    m.def(
        "check_conditions",
        [](const Tensor& a, py::object alpha, py::object beta, int s, int k, bool banded) {
            const PreconditionerSpec spec =
                spec_from_kwargs("full_band", alpha, beta, s, k, a.dim());
            const ConditionReport r = check_conditions(a, spec, banded);
            py::dict d;
            d["condition"] = to_string(r.condition_id);
            d["values"] = r.values;
            d["satisfied"] = r.satisfied;
            d["banded_interpretation"] = r.banded_interpretation;
            return d;
        },
        py::arg("a"), py::arg("alpha") = py::none(), py::arg("beta") = py::none(),
        py::arg("s") = 1, py::arg("k") = 1, py::arg("banded") = false);
    m.def(
        "classify",
        [](const Tensor& a, bool with_certificate) {
            const Classification c = classify(a, with_certificate);
            py::dict d;
            d["is_z"] = c.is_z;
            d["is_strong_m"] = c.is_strong_m;
            d["eta"] = c.eta;
            d["rho_b"] = c.rho_b;
            d["rho_bracket"] = py::make_tuple(c.rho_lower, c.rho_upper);
            if (!c.reason.empty()) d["reason"] = c.reason;
            if (c.positive_certificate) d["positive_certificate"] = *c.positive_certificate;
            return d;
        },
        py::arg("a"), py::arg("with_certificate") = false);

    m.def(
        "make_splitting",
        [](const Tensor& a, const std::string& family, const std::string& variant,
           py::object alpha, py::object beta, int s, int k, double omega) {
            const PreconditionerSpec spec =
                spec_from_kwargs(variant, alpha, beta, s, k, a.dim());
            return make_splitting(a, spec, {splitting_family_from_string(family), omega});
        },
        py::arg("a"), py::arg("family"), py::arg("variant") = "full_band",
        py::arg("alpha") = py::none(), py::arg("beta") = py::none(), py::arg("s") = 1,
        py::arg("k") = 1, py::arg("omega") = 1.0);
    m.def("iteration_tensor", &iteration_tensor);

    m.def(
        "solve",
        [](const SplitPair& split, const Vector& rhs, const Tensor& monitor_a,
           const Vector& monitor_b, double tol, int max_iter) {
            SolveOptions opts;
            opts.tol = tol;
            opts.max_iter = max_iter;
            const SolveResult res = solve(split, rhs, monitor_a, monitor_b, opts);
            return py::make_tuple(res.x, report_to_dict(res.report));
        },
        py::arg("split"), py::arg("rhs"), py::arg("monitor_a"), py::arg("monitor_b"),
        py::arg("tol") = 1e-12, py::arg("max_iter") = 2000);

    m.def(
        "spectral_radius",
        [](const Tensor& t, double tol, int max_iter) {
            const SpectralEstimate est = spectral_radius(t, tol, max_iter);
            py::dict d;
            d["rho"] = est.rho;
            d["lower"] = est.lower;
            d["upper"] = est.upper;
            d["iterations"] = est.iterations;
            d["converged"] = est.converged;
            d["shifted"] = est.shifted;
            d["perron"] = est.perron;
            return d;
        },
        py::arg("t"), py::arg("tol") = 1e-10, py::arg("max_iter") = 10000);

    m.def(
        "generate_example",
        [](int id, int n) {
            const ExampleSystem sys = generate_example({id, n});
            py::dict d;
            d["a"] = sys.a;
            d["b"] = sys.b;
            d["a_normalized"] = sys.a_normalized;
            d["b_normalized"] = sys.b_normalized;
            return d;
        },
        py::arg("id"), py::arg("n") = 0);
    m.def(
        "solve_example",
        [](int id, int n, const std::string& method, double alpha, double beta, int s,
           int k, double omega, double tol, int max_iter) {
            const ExampleSystem sys = generate_example({id, n});
            SolveOptions opts;
            opts.tol = tol;
            opts.max_iter = max_iter;
            const SolveResult res = solve_with_method(
                sys, bench_method_from_string(method), {alpha, beta, s, k, omega}, opts);
            return py::make_tuple(res.x, report_to_dict(res.report));
        },
        py::arg("id"), py::arg("n") = 0, py::arg("method") = "e2f2", py::arg("alpha") = 0.0,
        py::arg("beta") = 0.0, py::arg("s") = 1, py::arg("k") = 1, py::arg("omega") = 1.2,
        py::arg("tol") = 1e-12, py::arg("max_iter") = 2000);

    m.def("load_tensor", &load_tensor);
    m.def("store_tensor", &store_tensor);
    m.def("load_vector", &load_vector);
    m.def("store_vector", &store_vector);
}
