#include <doctest.h>

#include <Eigen/SVD>

#include <cmath>
#include <random>

#include "family.hpp"
#include "radialmaps/bounds.hpp"

using namespace radialmaps;

namespace {

const NormModel kModel{2.0, 3};

Vector basis(int j) {
    Vector v = Vector::Zero(kModel.n);
    v[j] = 1.0;
    return v;
}

std::vector<Vector> axis_samples() {
    std::vector<Vector> s = sphere_sample(kModel, 16, 2);
    s.push_back(basis(0));
    s.push_back(-basis(0));
    return s;
}

}  // namespace

TEST_CASE("coefficient bounds are attained by Koebe and trivial for the identity") {
    const RadialMap K = koebe_map(kModel, basis(0), 16);
    const auto S = axis_samples();
    const auto reps = check_bieberbach(K, K, 6, S);
    REQUIRE(reps.size() == 6);
    for (int s = 1; s <= 6; ++s) {
        CHECK(reps[size_t(s - 1)].passed);
        CHECK(reps[size_t(s - 1)].attained);
        CHECK(reps[size_t(s - 1)].rhs == doctest::Approx(double(s)).epsilon(1e-14));
    }

    const RadialMap I = profile_map(kModel, basis(0), TruncatedSeries::constant(1.0, 0));
    const auto ireps = check_bieberbach(I, I, 4, S);
    CHECK(ireps[0].attained);  // s = 1: the linear part itself
    for (int s = 2; s <= 4; ++s) {
        CHECK(ireps[size_t(s - 1)].lhs == doctest::Approx(0.0));
        CHECK(ireps[size_t(s - 1)].passed);
    }
}

TEST_CASE("growth envelope is attained on the Koebe axis") {
    const RadialMap K = koebe_map(kModel, basis(0), 128);
    const auto reps = check_growth(K, axis_samples(), {0.1, 0.4});
    REQUIRE(reps.size() == 4);
    for (const auto& rep : reps) {
        CHECK(rep.passed);
        CHECK(rep.attained);
    }
    // lower bound carries the -v witness, upper the +v witness
    CHECK(std::abs(reps[0].witness_direction[0] - Complex(-1.0)) < 1e-12);
    CHECK(std::abs(reps[1].witness_direction[0] - Complex(1.0)) < 1e-12);
}

TEST_CASE("covering floor certifies the covered ball for Koebe") {
    const RadialMap K = koebe_map(kModel, basis(0), 128);
    const BoundReport rep = covering_margin(K, 0.4, axis_samples(), 720);
    CHECK(rep.passed);
    CHECK(rep.attained);
    CHECK(rep.lhs == doctest::Approx(0.4 / 1.96).epsilon(1e-12));
}

TEST_CASE("ray and operator distortion envelopes hold with sharp axis values") {
    const RadialMap K = koebe_map(kModel, basis(0), 128);
    const auto S = axis_samples();
    for (const auto& rep : check_distortion_ray(K, S, {0.1, 0.4})) {
        CHECK(rep.passed);
        CHECK(rep.attained);
    }
    const auto hil = check_distortion_hilbert(K, S, {0.1, 0.4});
    REQUIRE(hil.size() == 4);
    for (const auto& rep : hil) CHECK(rep.passed);
    CHECK(hil[1].attained);  // upper operator norm is exactly (1+r)/(1-r)^3 at rv
    CHECK(hil[3].attained);

    const RadialMap K1 = koebe_map({1.0, 3}, basis(0), 16);
    CHECK_THROWS_AS((void)check_distortion_hilbert(K1, S, {0.2}), std::invalid_argument);
}

TEST_CASE("operator norm via the invariant-plane reduction") {
    const RadialMap K = koebe_map(kModel, basis(0), 64);
    // axis point: closed form (1+r)/(1-r)^3
    const double r = 0.35;
    CHECK(operator_norm_df(K, r * basis(0)) ==
          doctest::Approx((1 + r) / std::pow(1 - r, 3)).epsilon(1e-12));

    // generic point: compare with dense direction sampling + refinement
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g(0.0, 1.0);
    Vector x(3);
    for (int j = 0; j < 3; ++j) x[j] = Complex(g(rng), g(rng));
    x *= 0.45 / norm(x, kModel);

    Eigen::MatrixXcd M(3, 3);
    for (int j = 0; j < 3; ++j) M.col(j) = df_action(K, x, basis(j));
    const double svd = M.jacobiSvd().singularValues()(0);
    CHECK(operator_norm_df(K, x) == doctest::Approx(svd).epsilon(1e-12));
}

TEST_CASE("second coefficient functional: sharp at weight zero, bounded on the family") {
    const RadialMap K = koebe_map(kModel, basis(0), 16);
    const BoundReport zero = fekete_szego(K, basis(0), 0.0);
    CHECK(zero.attained);
    CHECK(zero.lhs == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(zero.rhs == doctest::Approx(3.0).epsilon(1e-14));

    for (const RadialMap& F : radialmaps::testing::stress_family(6)) {
        for (double lam : {0.2, 0.5, 0.8})
            CHECK(fekete_szego(F, basis(0), lam, 1e-8).passed);
    }

    CHECK_THROWS_AS((void)fekete_szego(K, basis(0), 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)fekete_szego(K, 0.3 * basis(0), 0.5), std::invalid_argument);
    const RadialMap bad =
        profile_map(kModel, basis(0), TruncatedSeries::constant(2.0, 0));
    CHECK_THROWS_AS((void)fekete_szego(bad, basis(0), 0.5), std::invalid_argument);
}

TEST_CASE("bloch seminorm of the identity is exactly one") {
    const RadialMap I = profile_map(kModel, basis(0), TruncatedSeries::constant(1.0, 0));
    CHECK(bloch_seminorm(I, axis_samples(), 64, 16) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("bloch-gated checks accept the identity and reject Koebe") {
    const auto S = axis_samples();
    const RadialMap I = profile_map(kModel, basis(0), TruncatedSeries::constant(1.0, 0));
    const BoundReport bonk = check_bonk(I, S, 16, 24);
    CHECK(bonk.passed);
    CHECK(bonk.slack >= 0.0);

    CriterionConfig cfg;
    cfg.boundary_grid = 360;
    const BoundReport schlicht = bloch_schlicht_check(I, S, cfg);
    CHECK(schlicht.passed);
    // the identity covers the full test ball: observed modulus is 1/sqrt(3)
    CHECK(schlicht.rhs == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    const RadialMap K = koebe_map(kModel, basis(0), 32);
    CHECK_THROWS_AS((void)check_bonk(K, S, 16, 24), std::domain_error);
    CHECK_THROWS_AS((void)bloch_schlicht_check(K, S, cfg), std::domain_error);
}

TEST_CASE("bound report sanity") {
    const RadialMap K = koebe_map(kModel, basis(0), 64);
    for (const auto& rep : check_growth(K, axis_samples(), {0.2})) {
        CHECK(rep.slack == doctest::Approx(rep.rhs - rep.lhs).epsilon(1e-15));
        CHECK(!rep.name.empty());
        CHECK(rep.witness_r == doctest::Approx(0.2));
    }
}
