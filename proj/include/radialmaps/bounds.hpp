#pragma once

#include <string>
#include <vector>

#include "radialmaps/criteria.hpp"
#include "radialmaps/maps.hpp"

namespace radialmaps {

/// One verified inequality, always recorded as lhs <= rhs. For upper bounds
/// lhs is the observed quantity; for lower bounds rhs is. slack = rhs - lhs.
struct BoundReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool attained = false;  // |slack| <= tol: equality case reached
    bool passed = false;    // slack >= -tol
    double witness_r = 0.0;
    Vector witness_direction;
    std::string note;
};

/// Coefficient bounds: sup |Q_{s-1}(u)| <= s * |f_F(0)| for s = 1..s_max, with
/// G either F itself or a map subordinate to F.
std::vector<BoundReport> check_bieberbach(const RadialMap& F, const RadialMap& G, int s_max,
                                          const std::vector<Vector>& samples, double tol = 1e-9);

/// r/(1+r)^2 <= |F(ru)| <= r/(1-r)^2 over samples, two reports per radius.
std::vector<BoundReport> check_growth(const RadialMap& F, const std::vector<Vector>& samples,
                                      const std::vector<double>& radii, double tol = 1e-9);

/// Smallest boundary modulus min_u min_theta |F(r e^{i theta} u)| against the
/// growth floor r/(1+r)^2; certifies the covered ball radius for univalent F
/// (univalence is the caller's precondition).
BoundReport covering_margin(const RadialMap& F, double r, const std::vector<Vector>& samples,
                            int grid, double tol = 1e-9);

/// r(1-r)/(1+r)^3 <= |DF(ru)(ru)| <= r(1+r)/(1-r)^3 over samples.
std::vector<BoundReport> check_distortion_ray(const RadialMap& F,
                                              const std::vector<Vector>& samples,
                                              const std::vector<double>& radii, double tol = 1e-9);

/// Exact operator norm of DF(x) = f(x)I + x (grad f)^T on the Euclidean model,
/// via restriction to the invariant subspace spanned by x and the gradient.
double operator_norm_df(const RadialMap& F, const Vector& x);

/// (1-r)/(1+r)^3 <= |DF(ru)| <= (1+r)/(1-r)^3 (Euclidean model only).
std::vector<BoundReport> check_distortion_hilbert(const RadialMap& F,
                                                  const std::vector<Vector>& samples,
                                                  const std::vector<double>& radii,
                                                  double tol = 1e-9);

/// |Q_2(u) - lambda Q_1(u)^2| <= 1 + 2 exp(-2 lambda / (1 - lambda)).
BoundReport fekete_szego(const RadialMap& F, const Vector& u, double lambda, double tol = 1e-9);

/// Grid estimate of sup (1 - |z|^2) |f_u'(z)| over sampled directions; radial
/// maps fix F(0) = 0 so this is the whole seminorm. The grid includes the
/// origin (value |f(0)|) and approaches the boundary as radial_grid grows.
double bloch_seminorm(const RadialMap& F, const std::vector<Vector>& samples, int radial_grid,
                      int angle_grid = 72);

/// Lower distortion for the unit Bloch class: Re l_x(DF(x)x) >= the explicit
/// bound on |x| <= 1/sqrt(3). Gated on |seminorm - 1| <= 1e-3 and f(0) = 1.
BoundReport check_bonk(const RadialMap& F, const std::vector<Vector>& samples, int radial_grid,
                       int angle_grid, double tol = 1e-9);

/// Schlicht-ball check for the unit Bloch class: univalence on the ball of
/// radius 1/sqrt(3) plus covered modulus at least sqrt(3)/4 there.
BoundReport bloch_schlicht_check(const RadialMap& F, const std::vector<Vector>& samples,
                                 const CriterionConfig& cfg, double tol = 1e-9);

}  // namespace radialmaps
