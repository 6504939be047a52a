#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "radialmaps/series.hpp"

namespace radialmaps {

using Vector = Eigen::VectorXcd;

/// Finite-dimensional l^p model on C^n, 1 <= p <= infinity.
/// p = std::numeric_limits<double>::infinity() selects the max norm.
struct NormModel {
    double p = 2.0;
    int n = 3;
};

bool is_inf_exponent(double p);
/// Conjugate exponent q with 1/p + 1/q = 1.
double dual_exponent(double p);

double norm(const Vector& x, const NormModel& model);

/// Linear functional y -> sum_j w_j * y_j.
struct SupportFunctional {
    Vector w;
    Complex operator()(const Vector& y) const;
};

/// Canonical norming functional at x != 0: l(x) = ||x|| and dual norm 1.
/// p = 1 puts the phase vector on the support of x; p = inf concentrates on
/// the smallest index attaining the max modulus unless inf_index names
/// another attaining index.
SupportFunctional support_functional(const Vector& x, const NormModel& model,
                                     std::optional<Eigen::Index> inf_index = {});

/// Deterministic unit vectors: the first min(count, n) entries are the
/// coordinate basis, the rest are l^p-normalized complex Gaussians.
std::vector<Vector> sphere_sample(const NormModel& model, int count, std::uint64_t seed);

}  // namespace radialmaps
