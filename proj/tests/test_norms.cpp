#include <doctest.h>

#include <cmath>
#include <limits>

#include "radialmaps/norms.hpp"

using namespace radialmaps;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("norms across exponents") {
    Vector x(3);
    x << Complex(3.0, 4.0), Complex(0.0, -2.0), Complex(1.0, 0.0);
    CHECK(norm(x, {1.0, 3}) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(norm(x, {2.0, 3}) == doctest::Approx(std::sqrt(30.0)).epsilon(1e-14));
    CHECK(norm(x, {kInf, 3}) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(norm(x, {3.0, 3}) ==
          doctest::Approx(std::cbrt(125.0 + 8.0 + 1.0)).epsilon(1e-14));
}

TEST_CASE("dual exponent") {
    CHECK(dual_exponent(2.0) == doctest::Approx(2.0));
    CHECK(dual_exponent(1.0) == kInf);
    CHECK(dual_exponent(kInf) == doctest::Approx(1.0));
    CHECK(dual_exponent(3.0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(is_inf_exponent(kInf));
    CHECK(!is_inf_exponent(2.0));
}

TEST_CASE("support functional norms its point and has unit dual norm") {
    Vector x(3);
    x << Complex(0.5, 0.25), Complex(-0.75, 0.0), Complex(0.0, 1.25);
    for (double p : {1.0, 2.0, 3.0, kInf}) {
        const NormModel model{p, 3};
        const SupportFunctional l = support_functional(x, model);
        const Complex lx = l(x);
        CHECK(std::abs(lx - norm(x, model)) < 1e-12);
        // dual norm check
        const NormModel dual{dual_exponent(p), 3};
        CHECK(norm(l.w, dual) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("support functional rejects zero") {
    CHECK_THROWS_AS((void)support_functional(Vector::Zero(3), {2.0, 3}),
                    std::domain_error);
}

TEST_CASE("sphere samples are unit and deterministic") {
    const NormModel model{3.0, 4};
    const auto a = sphere_sample(model, 10, 42);
    const auto b = sphere_sample(model, 10, 42);
    const auto c = sphere_sample(model, 10, 43);
    REQUIRE(a.size() == 10);
    bool differs = false;
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(norm(a[i], model) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((a[i] - b[i]).norm() == 0.0);
        differs = differs || (a[i] - c[i]).norm() > 1e-12;
    }
    CHECK(differs);
    // the first n entries are the coordinate basis
    for (int j = 0; j < model.n; ++j) {
        CHECK(std::abs(a[size_t(j)][j] - 1.0) < 1e-15);
    }
}
