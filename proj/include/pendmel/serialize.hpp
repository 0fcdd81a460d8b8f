#pragma once

#include "pendmel/abelian.hpp"
#include "pendmel/chebyshev.hpp"
#include "pendmel/fourier.hpp"
#include "pendmel/melnikov.hpp"
#include "pendmel/presets.hpp"

#include <json.hpp>

#include <string>

namespace pendmel {

using Json = nlohmann::json;

inline constexpr const char* schema_version = "1";

/// Coefficients as exact "num/den" strings, constant term first.
Json poly_to_json(const RationalPoly& p);
RationalPoly poly_from_json(const Json& j);

/// Accepts numbers (converted exactly) or strings parsed by parse_rational.
Rational rational_from_json(const Json& j);

Json to_json(const EllipticForm& f);
EllipticForm form_from_json(const Json& j);

/// {"terms": [{"s": int, "sin": [a1..an], "cos": [b0..bn]}, ...]}; missing
/// arrays are empty.
Json to_json(const Perturbation& p);
Perturbation perturbation_from_json(const Json& j);
Perturbation read_perturbation_file(const std::string& path);

Json to_json(const Bound& b);
Bound bound_from_json(const Json& j);

Json to_json(const ZeroReport& r);
ZeroReport zero_report_from_json(const Json& j);

Json to_json(const Configuration& c);
Json to_json(const Certificate& c);
Json to_json(const SweepResult& s);

/// Canonical text of a JSON document (two-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace pendmel
