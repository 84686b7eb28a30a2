#pragma once

#include <string>
#include <variant>

#include <gmpxx.h>
#include <json.hpp>

#include "cyclelift/localcycles.hpp"
#include "cyclelift/qseries.hpp"

namespace cyclelift::serialize {

// "num/den", reduced, den > 0.
std::string rational_to_string(const mpq_class& q);
// Accepts "a/b" or a bare integer; throws HypothesisViolation otherwise.
mpq_class parse_rational(const std::string& s);

nlohmann::json to_json(const qseries::RationalSeries& s);
nlohmann::json to_json(const qseries::SymbolicSeries& s);

using AnySeries = std::variant<qseries::RationalSeries, qseries::SymbolicSeries>;
// Rational when every coefficient is a string, symbolic when every
// coefficient is a list; an empty series reads as rational.
AnySeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const localcycles::LocalCycle& c);

// Deterministic text: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

// "x0+y0*d,x1+y1*d" or "x0+y0d,x1+y1d", optionally followed by "/p^e".
padic::VectorC parse_vector(const padic::LocalContext& ctx, const std::string& text);

}  // namespace cyclelift::serialize
