#include <doctest.h>

#include <cmath>

#include "radialmaps/mapfile.hpp"

using namespace radialmaps;

namespace {
const NormModel kModel{2.0, 3};
}

TEST_CASE("complex literals") {
    CHECK(parse_complex_literal("1") == Complex(1.0, 0.0));
    CHECK(parse_complex_literal("-2.5") == Complex(-2.5, 0.0));
    CHECK(parse_complex_literal("1e-3i") == Complex(0.0, 1e-3));
    CHECK(parse_complex_literal("1+2i") == Complex(1.0, 2.0));
    CHECK(parse_complex_literal("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex_literal("i") == Complex(0.0, 1.0));
    CHECK(parse_complex_literal("2-0.5i") == Complex(2.0, -0.5));
    CHECK(parse_complex_literal("1.5e2") == Complex(150.0, 0.0));
    CHECK(parse_complex_literal("1E+2i") == Complex(0.0, 100.0));
    CHECK_THROWS_AS((void)parse_complex_literal(""), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_complex_literal("1+2"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_complex_literal("abc"), std::invalid_argument);
}

TEST_CASE("serialize-parse-serialize is byte identical") {
    CoeffVector phi(3);
    phi << 1.0, Complex(0.125, -0.5), Complex(0.0, 1.0 / 3.0);
    Vector v(3);
    v << Complex(0.6, 0.0), Complex(0.0, 0.8), 0.0;
    const NormModel model{2.0, 3};
    const RadialMap F = profile_map(model, v / norm(v, model), TruncatedSeries(phi));

    const std::string once = serialize_map(F);
    const RadialMap G = parse_map(once);
    CHECK(serialize_map(G) == once);
    CHECK(G.model.n == 3);
    CHECK(std::abs(scalar_value(G, 0.3 * v) - scalar_value(F, 0.3 * v)) < 1e-15);
}

TEST_CASE("polynomial kinds round trip, including the sup-norm model") {
    const MultiPoly f(2, {{Eigen::Vector2i(0, 0), 1.0},
                          {Eigen::Vector2i(2, 1), Complex(-0.25, 1e-3)}});
    const RadialMap F = poly_field_map({std::numeric_limits<double>::infinity(), 2}, f);
    const std::string once = serialize_map(F);
    CHECK(once.find("p = inf") != std::string::npos);
    const RadialMap G = parse_map(once);
    CHECK(serialize_map(G) == once);
    CHECK(is_inf_exponent(G.model.p));
}

TEST_CASE("parse errors carry line and column positions") {
    // the format line must come first
    try {
        parse_map("kind = profile\nformat = radialmaps-map/1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }

    const std::string dup =
        "format = radialmaps-map/1\np = 2\np = 3\nn = 2\nkind = profile\n";
    CHECK_THROWS_AS((void)parse_map(dup), ParseError);

    try {
        parse_map("format = radialmaps-map/1\np = 2\nn = 2\nkind = profile\n"
                  "w = 1 0 0 0\nphi = 1 zz\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
        CHECK(e.col > 1);
    }

    // a functional with dual norm above one is rejected
    const std::string loud =
        "format = radialmaps-map/1\np = 2\nn = 2\nkind = profile\n"
        "w = 2 0 0 0\nphi = 1 0\n";
    CHECK_THROWS_AS((void)parse_map(loud), ParseError);

    // comments and blank lines are fine
    const std::string ok =
        "# heading\nformat = radialmaps-map/1\n\np = 2\nn = 2\nkind = profile\n"
        "w = 1 0 0 0\nphi = 1 0 0.5 0\n";
    CHECK(parse_map(ok).model.n == 2);
}

TEST_CASE("builtin map specs") {
    const RadialMap K = parse_map_spec("koebe", kModel, 48);
    Vector e1 = Vector::Zero(3);
    e1[0] = 1.0;
    CHECK(std::abs(scalar_value(K, 0.25 * e1) - 1.0 / (0.75 * 0.75)) < 1e-9);

    const RadialMap I = parse_map_spec("identity", kModel, 12);
    CHECK(std::abs(scalar_value(I, 0.5 * e1) - 1.0) < 1e-15);

    const RadialMap P = parse_map_spec("profile:1,0.5,-0.25i", kModel, 12);
    CHECK(std::abs(scalar_value(P, 0.5 * e1) -
                   (1.0 + 0.25 + Complex(0.0, -0.25) * 0.25)) < 1e-14);

    const RadialMap Q = parse_map_spec("poly:1:0,0,0;0.5i:1,1,0", kModel, 12);
    Vector x(3);
    x << 0.2, 0.3, 0.1;
    CHECK(std::abs(scalar_value(Q, x) - (1.0 + Complex(0, 0.5) * 0.06)) < 1e-14);

    CHECK_THROWS(parse_map_spec("no-such-map", kModel, 12));
}
