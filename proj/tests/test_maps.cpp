#include <doctest.h>

#include <cmath>

#include "radialmaps/maps.hpp"

using namespace radialmaps;

namespace {

const NormModel kModel{2.0, 3};

Vector basis(int j) {
    Vector v = Vector::Zero(kModel.n);
    v[j] = 1.0;
    return v;
}

Vector point(Complex a, Complex b, Complex c) {
    Vector x(3);
    x << a, b, c;
    return x;
}

}  // namespace

TEST_CASE("koebe slice along its axis has coefficients 0,1,2,...") {
    const RadialMap F = koebe_map(kModel, basis(0), 16);
    const TruncatedSeries h = slice_series(F, basis(0), 16);
    for (int k = 0; k <= 16; ++k) CHECK(std::abs(h.coeff(k) - double(k)) < 1e-14);
    // orthogonal direction: the slice collapses to z
    const TruncatedSeries perp = slice_series(F, basis(1), 16);
    CHECK(std::abs(perp.coeff(1) - 1.0) < 1e-15);
    for (int k : {0, 2, 3, 10}) CHECK(std::abs(perp.coeff(k)) < 1e-15);
}

TEST_CASE("scalar value and radial derivatives match the closed Koebe forms") {
    const RadialMap F = koebe_map(kModel, basis(0), 256);
    const double r = 0.3;
    const Vector x = r * basis(0);
    // f = 1/(1-r)^2, Df(x)x = 2r/(1-r)^3, D^2 f (x,x) = 6 r^2/(1-r)^4
    CHECK(std::abs(scalar_value(F, x) - 1.0 / std::pow(1 - r, 2)) < 1e-12);
    CHECK(std::abs(radial_derivative(F, x) - 2 * r / std::pow(1 - r, 3)) < 1e-12);
    CHECK(std::abs(radial_second(F, x) - 6 * r * r / std::pow(1 - r, 4)) < 1e-12);
    CHECK((evaluate(F, x) - (1.0 / std::pow(1 - r, 2)) * x).norm() < 1e-12);
}

TEST_CASE("homogeneous parts rebuild the map inside the ball") {
    const RadialMap F = koebe_map(kModel, basis(0), 64);
    const Vector x = point({0.2, 0.1}, {-0.15, 0.05}, {0.0, 0.1});
    CHECK((eval_via_homogeneous(F, x, 40) - evaluate(F, x)).norm() < 1e-12);
    // Q_k along the axis is k+1
    for (int k = 0; k <= 6; ++k)
        CHECK(std::abs(homogeneous_coeff(F, k, basis(0)) - double(k + 1)) < 1e-13);
}

TEST_CASE("homogeneous sup over samples is attained on the axis for Koebe") {
    const RadialMap F = koebe_map(kModel, basis(0), 16);
    std::vector<Vector> samples = sphere_sample(kModel, 8, 5);
    samples.push_back(basis(0));
    samples.push_back(-basis(0));
    for (int s = 1; s <= 6; ++s)
        CHECK(homogeneous_sup(F, s, samples) == doctest::Approx(double(s)).epsilon(1e-12));
}

TEST_CASE("multivariate polynomial arithmetic is consistent with evaluation") {
    // f = 1 + 2 x1 x2, g = x3^2 - 0.5i x1
    const MultiPoly f(3, {{Eigen::Vector3i(0, 0, 0), 1.0},
                          {Eigen::Vector3i(1, 1, 0), 2.0}});
    const MultiPoly g(3, {{Eigen::Vector3i(0, 0, 2), 1.0},
                          {Eigen::Vector3i(1, 0, 0), Complex(0.0, -0.5)}});
    const Vector x = point({0.3, -0.2}, {0.1, 0.4}, {-0.25, 0.15});
    const MultiPoly prod = multiply(f, g, 8);
    CHECK(std::abs(eval(prod, x) - eval(f, x) * eval(g, x)) < 1e-14);
    CHECK(std::abs(eval(add(f, g), x) - (eval(f, x) + eval(g, x))) < 1e-14);
    CHECK(std::abs(eval(scale(f, Complex(0, 2)), x) - Complex(0, 2) * eval(f, x)) < 1e-14);
    CHECK(prod.total_degree() == 4);
    CHECK_THROWS_AS((void)multiply(f, g, 3), std::domain_error);

    // partial derivative: d/dx1 (1 + 2 x1 x2) = 2 x2
    CHECK(std::abs(eval_partial(f, 0, x) - 2.0 * x[1]) < 1e-14);
    CHECK(std::abs(eval_partial(f, 2, x)) < 1e-15);

    // homogeneous split sums back to the value
    Complex sum = 0.0;
    for (int k = 0; k <= prod.total_degree(); ++k) sum += eval_homogeneous(prod, k, x);
    CHECK(std::abs(sum - eval(prod, x)) < 1e-14);
}

TEST_CASE("linear form powers expand correctly") {
    Vector w(3);
    w << Complex(1.0, 0.5), Complex(-0.25, 0.0), Complex(0.0, 2.0);
    const MultiPoly p = linear_form_power(w, 3, 8);
    const Vector x = point({0.2, 0.3}, {0.4, -0.1}, {-0.3, 0.2});
    const Complex lin = w[0] * x[0] + w[1] * x[1] + w[2] * x[2];
    CHECK(std::abs(eval(p, x) - lin * lin * lin) < 1e-13);
    CHECK(p.total_degree() == 3);
    CHECK_THROWS_AS((void)linear_form_power(w, 5, 4), std::domain_error);
}

TEST_CASE("polynomial scalar fields use the Euler identities") {
    // f = 1 + x1 x2 + 3 x3^3: Df(x)x = 2 x1 x2 + 9 x3^3, D2 f = 2 x1 x2 + 54 x3^3 / ... by k(k-1)
    const MultiPoly f(3, {{Eigen::Vector3i(0, 0, 0), 1.0},
                          {Eigen::Vector3i(1, 1, 0), 1.0},
                          {Eigen::Vector3i(0, 0, 3), 3.0}});
    const RadialMap F = poly_field_map(kModel, f);
    const Vector x = point({0.3, 0.1}, {-0.2, 0.2}, {0.25, -0.05});
    const Complex m2 = x[0] * x[1];
    const Complex m3 = x[2] * x[2] * x[2];
    CHECK(std::abs(scalar_value(F, x) - (1.0 + m2 + 3.0 * m3)) < 1e-14);
    CHECK(std::abs(radial_derivative(F, x) - (2.0 * m2 + 9.0 * m3)) < 1e-14);
    CHECK(std::abs(radial_second(F, x) - (2.0 * m2 + 18.0 * m3)) < 1e-14);
    CHECK(is_normalized(F));
}

TEST_CASE("inverse transfer and quasiconvex scalars match Koebe closed forms") {
    const RadialMap F = koebe_map(kModel, basis(0), 256);
    const double r = 0.2;
    const Vector x = r * basis(0);
    // h = z/(1-z)^2: h/(z h') = (1-z)/(1+z); 1 + (2Df x + D2 f xx)/(f + Df x) = 1+(4r+2r^2)/(1-r^2)
    CHECK(std::abs(inverse_transfer_scalar(F, x) - (1 - r) / (1 + r)) < 1e-12);
    CHECK(std::abs(quasiconvex_scalar(F, x) - (1.0 + (4 * r + 2 * r * r) / (1 - r * r))) <
          1e-12);
}

TEST_CASE("transfer scalar rejects a vanishing denominator") {
    // f = 1 - 2 l(x): f + Df x = 1 - 4 t vanishes at t = 1/4
    CoeffVector c(2);
    c << 1.0, -2.0;
    const RadialMap F = profile_map(kModel, basis(0), TruncatedSeries(std::move(c)));
    CHECK_THROWS_AS((void)inverse_transfer_scalar(F, 0.25 * basis(0)), std::domain_error);
}

TEST_CASE("alexander transform is the slice derivative") {
    const RadialMap F = koebe_map(kModel, basis(0), 24);
    const RadialMap G = alexander_transform(F);
    Vector u = point({0.6, 0.3}, {0.5, -0.2}, {0.35, 0.1});
    u /= norm(u, kModel);
    const TruncatedSeries h = slice_series(F, u, 24);
    const TruncatedSeries g = slice_series(G, u, 24);
    // g(z) = z h'(z): coefficients g_k = k h_k
    for (int k = 0; k <= 24; ++k)
        CHECK(std::abs(g.coeff(k) - double(k) * h.coeff(k)) < 1e-13);
}

TEST_CASE("schwarz powers compose exactly for profile fields") {
    const int m = 3;
    const RadialMap F = koebe_map(kModel, basis(0), 10);
    const SchwarzPower V = schwarz_power(kModel, basis(0), m);
    const RadialMap FV = schwarz_compose(F, V, 64);

    Vector x = 0.4 * point({0.8, 0.1}, {0.3, -0.4}, {0.2, 0.2});
    CHECK((evaluate(FV, x) - evaluate(F, radialmaps::apply(V, x))).norm() < 1e-13);

    // slice coefficients land on the m-grid: psi_{m k + m - 1} = phi_k
    const TruncatedSeries s = slice_series(FV, basis(0), 40);
    for (int k = 0; k <= 10; ++k)
        CHECK(std::abs(s.coeff(m * k + m) - double(k + 1)) < 1e-13);
    CHECK(std::abs(s.coeff(2)) < 1e-15);

    CHECK_THROWS_AS((void)schwarz_power(kModel, basis(0), 0), std::invalid_argument);
}

TEST_CASE("schwarz composition of a polynomial field respects the degree cap") {
    const MultiPoly f(3, {{Eigen::Vector3i(0, 0, 0), 1.0},
                          {Eigen::Vector3i(0, 2, 0), 0.5}});
    const RadialMap F = poly_field_map(kModel, f);
    const SchwarzPower V = schwarz_power(kModel, basis(0), 2);
    const RadialMap FV = schwarz_compose(F, V, 16);
    const Vector x = 0.3 * point({0.5, 0.5}, {0.6, -0.1}, {0.1, 0.6});
    CHECK((evaluate(FV, x) - evaluate(F, radialmaps::apply(V, x))).norm() < 1e-14);
    CHECK_THROWS_AS((void)schwarz_compose(F, schwarz_power(kModel, basis(0), 9), 8),
                    std::domain_error);
}

TEST_CASE("profile fields expand to polynomial fields") {
    CoeffVector c(4);
    c << 1.0, Complex(0.5, 0.25), Complex(-0.125, 0.0), Complex(0.0, 0.0625);
    const RadialMap F = profile_map(kModel, basis(0), TruncatedSeries(std::move(c)));
    const RadialMap P = to_poly(F, 8);
    const Vector x = 0.5 * point({0.4, 0.3}, {-0.5, 0.2}, {0.3, -0.6});
    CHECK((evaluate(P, x) - evaluate(F, x)).norm() < 1e-14);
    CHECK(std::abs(scalar_value(P, x) - scalar_value(F, x)) < 1e-14);
}

TEST_CASE("support direction inverts the canonical functional") {
    for (double p : {1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()}) {
        const NormModel model{p, 3};
        Vector x = point({0.5, 0.3}, {-0.2, 0.6}, {0.1, -0.7});
        x /= norm(x, model);
        const SupportFunctional l = support_functional(x, model);
        const Vector v = support_direction(l, model);
        CHECK(norm(v, model) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(l(v) - 1.0) < 1e-12);  // v is a norming point of l
    }
}

TEST_CASE("component maps evaluate and differentiate") {
    const RadialMap F = koebe_map(kModel, basis(0), 12);
    const PolyMap P = to_poly_map(F, 16);
    REQUIRE(P.components.size() == 3);
    const Vector x = 0.35 * point({0.7, 0.1}, {0.4, -0.3}, {0.2, 0.45});
    CHECK((eval(P, x) - evaluate(F, x)).norm() < 1e-13);

    // jacobian against a central difference
    const Eigen::MatrixXcd J = jacobian(P, x);
    const double h = 1e-6;
    for (int j = 0; j < 3; ++j) {
        Vector xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        const Vector col = (eval(P, xp) - eval(P, xm)) / (2 * h);
        CHECK((J.col(j) - col).norm() < 1e-7);
    }
}

TEST_CASE("slice series demands a unit direction") {
    const RadialMap F = koebe_map(kModel, basis(0), 8);
    CHECK_THROWS_AS((void)slice_series(F, 0.5 * basis(0), 8), std::invalid_argument);
}
