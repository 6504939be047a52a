#pragma once

#include <vector>

#include "radialmaps/bounds.hpp"
#include "radialmaps/maps.hpp"

namespace radialmaps {

enum class RadiusVariant {
    general,  // order-m subordination, tail cut at N
    fixed_V,  // first-order subordination (m = 1 closed form)
    limit     // m -> infinity limit of the general equation
};

struct RadiusQuery {
    RadiusVariant variant = RadiusVariant::general;
    int m = 1;  // ignored by the limit variant; must be 1 for fixed_V
    int N = 1;
};

struct RadiusResult {
    double r = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Left-hand side of the radius equation; negative at 0+, positive near 1-,
/// strictly increasing, so the root is the threshold radius.
double radius_equation(double r, const RadiusQuery& q);

/// Bracketed bisection to machine width, Newton polish, and a sign-count
/// uniqueness audit on a 1000-point grid.
RadiusResult solve_radius(const RadiusQuery& q);

struct TailSum {
    double partial = 0.0;    // exact sum of |P_s(x)| for s = N..s_cap
    double remainder = 0.0;  // analytic majorant tail beyond s_cap
    double total() const { return partial + remainder; }
};

/// Sum of homogeneous-part norms |P_s(x)| from N up, with the geometric
/// remainder sum_{s>s_cap} s * majorant_df0 * |x|^s added in closed form.
TailSum bohr_tail_sum(const RadialMap& G, const Vector& x, int N, int s_cap = 200,
                      double majorant_df0 = 1.0);

/// max over samples at |x| = r of |F(V(x))| + tail sum, against the covered
/// distance 1/4 |f(0)| (conservative bound on dist(F(0), boundary of F(B))).
/// V is the order-m Schwarz power along the map's own distinguished direction.
BoundReport rogosinski_check(const RadialMap& F, int m, int N, double r,
                             const std::vector<Vector>& samples, double tol = 1e-9,
                             int s_cap = 200);

}  // namespace radialmaps
