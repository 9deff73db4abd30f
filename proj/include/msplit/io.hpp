#pragma once

#include <string>

#include "json.hpp"

#include "msplit/precondition.hpp"
#include "msplit/solver.hpp"
#include "msplit/spectral.hpp"
#include "msplit/tensor.hpp"

namespace msplit {

/// Tensor files are JSON, either dense
///   {"order": m, "dim": n, "entries": [ ... n^m reals, row-major ... ]}
/// or sparse COO with 1-based indices and zero defaults
///   {"order": m, "dim": n, "coo": [[i1,...,im,value], ...]}.
/// Vectors:
///   {"dim": n, "entries": [...]}.
Tensor tensor_from_json(const nlohmann::json& j);
nlohmann::json tensor_to_json(const Tensor& t);
Tensor load_tensor(const std::string& path);
void store_tensor(const Tensor& t, const std::string& path);

Vector vector_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);
Vector load_vector(const std::string& path);
void store_vector(const Vector& v, const std::string& path);

/// PreconditionerSpec JSON, e.g. {"variant":"full_band","alpha":[...],"beta":4.0,"s":2,"k":2}.
/// Scalar alpha/beta broadcast to the band length for dimension n.
PreconditionerSpec preconditioner_spec_from_json(const nlohmann::json& j, int n);
nlohmann::json preconditioner_spec_to_json(const PreconditionerSpec& spec);

nlohmann::json solve_report_to_json(const SolveReport& report);
nlohmann::json spectral_estimate_to_json(const SpectralEstimate& est);
nlohmann::json classification_to_json(const Classification& c);
nlohmann::json condition_report_to_json(const ConditionReport& report);

}  // namespace msplit
