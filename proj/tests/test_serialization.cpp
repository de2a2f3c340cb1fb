#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "defectlab/serialization.hpp"

#include "helpers.hpp"

using namespace defectlab;
using testutil::linear_form;
using testutil::qp;

TEST_CASE("rationals load from strings and integers, never floats") {
    CHECK(rational_from_json(Json("3/4")) == Rational(3, 4));
    CHECK(rational_from_json(Json(-7)) == Rational(-7));
    CHECK(rational_from_json(Json("-2.5")) == Rational(-5, 2));
    CHECK_THROWS_AS(rational_from_json(Json(0.25)), Error);
    CHECK(gauss_rational_from_json(Json("1/2+2i")) ==
          GaussRational(Rational(1, 2), Rational(2)));
}

TEST_CASE("hompoly round trip") {
    HomPoly p(2, 3);
    p.set_coeff({3, 0, 0}, Rational(2));
    p.set_coeff({1, 1, 1}, Rational(-1, 3));
    const Json j = hompoly_to_json(p);
    CHECK(hompoly_from_json(j) == p);
    CHECK(j["n"] == 2);
    CHECK(j["degree"] == 3);
}

TEST_CASE("family round trip preserves labels and members") {
    HypersurfaceFamily fam;
    fam.n = 1;
    fam.k = 1;
    fam.labels = {"A", "B"};
    fam.members = {linear_form({1, 0}), linear_form({2, -3})};
    const HypersurfaceFamily back = family_from_json(family_to_json(fam));
    CHECK(back.n == fam.n);
    CHECK(back.k == fam.k);
    CHECK(back.labels == fam.labels);
    CHECK(back.members[0] == fam.members[0]);
    CHECK(back.members[1] == fam.members[1]);
}

TEST_CASE("curve round trip with gaussian coefficients") {
    MeromorphicCurve f;
    f.n = 1;
    f.components = {widen(qp({1})),
                    GPoly({GaussRational(Rational(0), Rational(1)), GaussRational(1)})};
    const MeromorphicCurve back = curve_from_json(curve_to_json(f));
    CHECK(back.n == 1);
    CHECK(back.components[0] == f.components[0]);
    CHECK(back.components[1] == f.components[1]);
}

TEST_CASE("mpoly and immersion round trips") {
    const MPoly p = MPoly::variable(2, 0).pow(2) - Rational(1, 2) * MPoly::variable(2, 1);
    CHECK(mpoly_from_json(mpoly_to_json(p)) == p);

    PolyImmersion f;
    f.m = 2;
    f.n = 3;
    f.components = {MPoly::variable(2, 0), MPoly::variable(2, 1), p};
    const PolyImmersion back = immersion_from_json(immersion_to_json(f));
    CHECK(back.m == 2);
    CHECK(back.n == 3);
    CHECK(back.components[2] == p);
}

TEST_CASE("doubles are serialized as fifteen-significant-digit strings") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333333");
    CHECK(json_double(2.0).get<std::string>() == "2");
    const Json arr = json_doubles({1.5, -0.25});
    CHECK(arr[0].get<std::string>() == "1.5");
    CHECK(arr[1].get<std::string>() == "-0.25");
}

TEST_CASE("profile csv has the fixed header and one row per radius") {
    FmtReport rep;
    rep.r = {2.0, 4.0};
    rep.T = {0.1, 0.2};
    rep.N_full = {0.0, 0.1};
    rep.N_trunc = {0.0, 0.1};
    rep.m = {0.1, 0.1};
    rep.residual = {-0.3, -0.3};
    const std::string csv = profile_csv(rep);
    CHECK(csv.substr(0, csv.find('\n')) == "r,T,N,N_trunc,m,residual");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("file io round trip") {
    const auto path = std::filesystem::temp_directory_path() / "defectlab_io_test.json";
    save_text(path.string(), "{\"n\": 1, \"degree\": 1, \"terms\": []}\n");
    const Json j = load_json(path.string());
    CHECK(hompoly_from_json(j).is_zero());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_json(path.string()), Error);
}
