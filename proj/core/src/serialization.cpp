#include "defectlab/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace defectlab {

namespace {

const Json& field(const Json& j, const char* key) {
    require(j.is_object() && j.contains(key), ErrorKind::InvalidInput,
            std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    require(v.is_number_integer(), ErrorKind::InvalidInput,
            std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

MultiIndex exp_field(const Json& j, std::size_t arity) {
    const Json& v = field(j, "exp");
    require(v.is_array() && v.size() == arity, ErrorKind::InvalidInput,
            "exponent vector has the wrong length");
    MultiIndex e;
    for (const auto& x : v) {
        require(x.is_number_integer(), ErrorKind::InvalidInput, "exponents must be integers");
        const int xi = x.get<int>();
        require(xi >= 0, ErrorKind::InvalidInput, "exponents must be nonnegative");
        e.push_back(xi);
    }
    return e;
}

Json exp_to_json(const MultiIndex& e) {
    Json a = Json::array();
    for (int x : e) a.push_back(x);
    return a;
}

} // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail(ErrorKind::InvalidInput,
         "coefficients must be exact strings or integers, not floating-point numbers");
}

GaussRational gauss_rational_from_json(const Json& j) {
    if (j.is_string()) return GaussRational::parse(j.get<std::string>());
    if (j.is_number_integer()) return GaussRational(Rational(j.get<long>()));
    fail(ErrorKind::InvalidInput,
         "coefficients must be exact strings or integers, not floating-point numbers");
}

HomPoly hompoly_from_json(const Json& j) {
    const int n = int_field(j, "n");
    const int degree = int_field(j, "degree");
    require(n >= 0 && degree >= 0, ErrorKind::InvalidInput, "n and degree must be nonnegative");
    HomPoly p(n, degree);
    const Json& terms = field(j, "terms");
    require(terms.is_array(), ErrorKind::InvalidInput, "'terms' must be an array");
    for (const auto& t : terms) {
        const MultiIndex e = exp_field(t, static_cast<std::size_t>(n) + 1);
        require(mi_degree(e) == degree, ErrorKind::InvalidInput,
                "term exponents must sum to the declared degree");
        p.set_coeff(e, p.coeff(e) + rational_from_json(field(t, "coef")));
    }
    return p;
}

Json hompoly_to_json(const HomPoly& p) {
    Json j;
    j["n"] = p.n();
    j["degree"] = p.degree();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = exp_to_json(e);
        t["coef"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

HypersurfaceFamily family_from_json(const Json& j) {
    HypersurfaceFamily f;
    f.n = int_field(j, "n");
    f.k = int_field(j, "k");
    const Json& members = field(j, "members");
    require(members.is_array() && !members.empty(), ErrorKind::InvalidInput,
            "'members' must be a nonempty array");
    for (const auto& m : members) {
        const Json& label = field(m, "label");
        require(label.is_string(), ErrorKind::InvalidInput, "member labels must be strings");
        f.labels.push_back(label.get<std::string>());
        f.members.push_back(hompoly_from_json(field(m, "poly")));
    }
    f.validate();
    return f;
}

Json family_to_json(const HypersurfaceFamily& f) {
    Json j;
    j["n"] = f.n;
    j["k"] = f.k;
    Json members = Json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        Json m;
        m["label"] = f.labels[i];
        m["poly"] = hompoly_to_json(f.members[i]);
        members.push_back(std::move(m));
    }
    j["members"] = std::move(members);
    return j;
}

MeromorphicCurve curve_from_json(const Json& j) {
    MeromorphicCurve f;
    f.n = int_field(j, "n");
    const Json& comps = field(j, "components");
    require(comps.is_array(), ErrorKind::InvalidInput, "'components' must be an array");
    for (const auto& c : comps) {
        require(c.is_array(), ErrorKind::InvalidInput,
                "each component must be an array of coefficients, ascending");
        std::vector<GaussRational> coeffs;
        for (const auto& x : c) coeffs.push_back(gauss_rational_from_json(x));
        f.components.emplace_back(std::move(coeffs));
    }
    f.validate();
    return f;
}

Json curve_to_json(const MeromorphicCurve& f) {
    Json j;
    j["n"] = f.n;
    Json comps = Json::array();
    for (const auto& c : f.components) {
        Json a = Json::array();
        for (const auto& v : c.coeffs()) a.push_back(v.str());
        comps.push_back(std::move(a));
    }
    j["components"] = std::move(comps);
    return j;
}

MPoly mpoly_from_json(const Json& j) {
    const int m = int_field(j, "m");
    require(m >= 1, ErrorKind::InvalidInput, "m must be at least 1");
    MPoly p(m);
    const Json& terms = field(j, "terms");
    require(terms.is_array(), ErrorKind::InvalidInput, "'terms' must be an array");
    for (const auto& t : terms) {
        const MultiIndex e = exp_field(t, static_cast<std::size_t>(m));
        p.set_coeff(e, p.coeff(e) + rational_from_json(field(t, "coef")));
    }
    return p;
}

Json mpoly_to_json(const MPoly& p) {
    Json j;
    j["m"] = p.vars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = exp_to_json(e);
        t["coef"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

PolyImmersion immersion_from_json(const Json& j) {
    PolyImmersion f;
    f.m = int_field(j, "m");
    f.n = int_field(j, "n");
    const Json& comps = field(j, "components");
    require(comps.is_array(), ErrorKind::InvalidInput, "'components' must be an array");
    for (const auto& c : comps) {
        MPoly p = mpoly_from_json(c);
        require(p.vars() == f.m, ErrorKind::AmbientMismatch,
                "component variable count must match m");
        f.components.push_back(std::move(p));
    }
    f.validate();
    return f;
}

Json immersion_to_json(const PolyImmersion& f) {
    Json j;
    j["m"] = f.m;
    j["n"] = f.n;
    Json comps = Json::array();
    for (const auto& c : f.components) comps.push_back(mpoly_to_json(c));
    j["components"] = std::move(comps);
    return j;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::InvalidInput, "cannot open file: " + path);
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    require(!j.is_discarded(), ErrorKind::InvalidInput, "malformed JSON in file: " + path);
    return j;
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    require(out.good(), ErrorKind::InvalidInput, "cannot write file: " + path);
    out << text;
    require(out.good(), ErrorKind::InvalidInput, "write failed: " + path);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

Json json_double(double v) { return Json(format_double(v)); }

Json json_doubles(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(format_double(x));
    return a;
}

std::string profile_csv(const FmtReport& rep) {
    std::ostringstream out;
    out << "r,T,N,N_trunc,m,residual\n";
    for (std::size_t i = 0; i < rep.r.size(); ++i) {
        out << format_double(rep.r[i]) << ',' << format_double(rep.T[i]) << ','
            << format_double(rep.N_full[i]) << ',' << format_double(rep.N_trunc[i]) << ','
            << format_double(rep.m[i]) << ',' << format_double(rep.residual[i]) << '\n';
    }
    return out.str();
}

} // namespace defectlab
