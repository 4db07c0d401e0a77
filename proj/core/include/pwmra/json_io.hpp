#pragma once

// JSON rendering of exact objects. Scalars use their canonical strings;
// matrices carry a float rendering alongside.

#include <string>

#include <nlohmann/json.hpp>

#include "pwmra/filterbank.hpp"
#include "pwmra/linalg.hpp"
#include "pwmra/mrabuild.hpp"
#include "pwmra/refine.hpp"

namespace pwmra {

using Json = nlohmann::json;

/// %.17g
std::string format_double(double x);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"breakpoints": [...], "pieces": [[c0, c1, ...], ...]}
Json to_json(const PiecewisePoly& f);
PiecewisePoly piecewise_from_json(const Json& j);

/// {"exact": row-major strings, "float": row-major numbers}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const SymmetryType& s);
Json to_json(const std::vector<CheckRecord>& checks);

Json to_json(const ScalingVector& phi);
Json to_json(const RefinementSet& rs);

/// The full artifact written by `build`.
Json build_document(const ScalingVector& phi, const RefinementSet& rs);

/// {"n": n, "coefficients": [[...], ...]}
Json stream_to_json(int n, const CoeffStream& s);
/// Accepts the object form above or a bare array of vectors.
CoeffStream stream_from_json(const Json& j);

Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

}  // namespace pwmra
