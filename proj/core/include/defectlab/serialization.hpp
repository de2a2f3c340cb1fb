#pragma once

#include <string>

#include <json.hpp>

#include "defectlab/gaussmap.hpp"
#include "defectlab/hompoly.hpp"
#include "defectlab/nevanlinna.hpp"
#include "defectlab/position.hpp"

namespace defectlab {

using Json = nlohmann::ordered_json;

// --- exact scalar fields ---------------------------------------------------
// Coefficients are accepted as exact strings ("p", "p/q", "a+bi") or JSON
// integers; floating-point JSON numbers are rejected so no precision is lost.
Rational rational_from_json(const Json& j);
GaussRational gauss_rational_from_json(const Json& j);

// --- polynomial / family / curve / immersion codecs ------------------------
// HomPoly:    {"n": int, "degree": int, "terms": [{"exp": [..], "coef": s}]}
// Family:     {"n": int, "k": int, "members": [{"label": s, "poly": HomPoly}]}
// Curve:      {"n": int, "components": [[coef strings, ascending], ..]}
// MPoly:      {"m": int, "terms": [{"exp": [..], "coef": s}]}
// Immersion:  {"m": int, "n": int, "components": [MPoly, ..]}
HomPoly hompoly_from_json(const Json& j);
Json hompoly_to_json(const HomPoly& p);

HypersurfaceFamily family_from_json(const Json& j);
Json family_to_json(const HypersurfaceFamily& f);

MeromorphicCurve curve_from_json(const Json& j);
Json curve_to_json(const MeromorphicCurve& f);

MPoly mpoly_from_json(const Json& j);
Json mpoly_to_json(const MPoly& p);

PolyImmersion immersion_from_json(const Json& j);
Json immersion_to_json(const PolyImmersion& f);

// --- files ------------------------------------------------------------------
Json load_json(const std::string& path);             // parse errors -> invalid-input
void save_text(const std::string& path, const std::string& text);

// --- deterministic report formatting ----------------------------------------
std::string format_double(double v);                  // %.15g, byte-stable
Json json_double(double v);                           // %.15g as a JSON string
Json json_doubles(const std::vector<double>& v);

// CSV profile "r,T,N,N_trunc,m,residual" with %.15g fields.
std::string profile_csv(const FmtReport& rep);

} // namespace defectlab
