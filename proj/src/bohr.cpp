#include "radialmaps/bohr.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace radialmaps {

namespace {

void check_query(const RadiusQuery& q) {
    if (q.N < 1) throw std::invalid_argument("tail index N must be at least 1");
    if (q.variant == RadiusVariant::limit) return;
    if (q.m < 1) throw std::invalid_argument("subordination order m must be at least 1");
    if (q.variant == RadiusVariant::fixed_V && q.m != 1)
        throw std::invalid_argument("the first-order variant fixes m = 1");
}

// sum_{s >= M} s r^s
double tail_series(int M, double r) {
    return std::pow(r, M) * (M * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r));
}

}  // namespace

double radius_equation(double r, const RadiusQuery& q) {
    check_query(q);
    if (!(r > 0.0) || r >= 1.0)
        throw std::invalid_argument("radius equation is defined on (0, 1)");
    const double tail = std::pow(r, q.N) * (q.N * (1.0 - r) + r);
    switch (q.variant) {
        case RadiusVariant::general: {
            const double rm = std::pow(r, q.m);
            const double ratio = (1.0 - rm) / (1.0 - r);
            return 4.0 * rm - (1.0 - rm) * (1.0 - rm) + 4.0 * tail * ratio * ratio;
        }
        case RadiusVariant::fixed_V:
            return 4.0 * r - (1.0 - r) * (1.0 - r) + 4.0 * tail;
        case RadiusVariant::limit:
        default:
            return 4.0 * tail / ((1.0 - r) * (1.0 - r)) - 1.0;
    }
}

RadiusResult solve_radius(const RadiusQuery& q) {
    check_query(q);
    double lo = 1e-9, hi = 1.0 - 1e-9;
    if (!(radius_equation(lo, q) < 0.0) || !(radius_equation(hi, q) > 0.0))
        throw std::runtime_error("radius equation does not bracket a root on (0, 1)");

    RadiusResult res;
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        (radius_equation(mid, q) < 0.0 ? lo : hi) = mid;
        ++res.iterations;
    }
    res.r = 0.5 * (lo + hi);
    res.residual = std::abs(radius_equation(res.r, q));

    for (int k = 0; k < 3; ++k) {  // safeguarded polish with a numeric derivative
        const double h = 1e-7 * std::max(res.r, 1e-3);
        const double f = radius_equation(res.r, q);
        const double df = (radius_equation(res.r + h, q) - radius_equation(res.r - h, q)) / (2 * h);
        if (df == 0.0) break;
        const double next = res.r - f / df;
        if (!(next > 0.0) || next >= 1.0) break;
        if (std::abs(radius_equation(next, q)) < res.residual) {
            res.r = next;
            res.residual = std::abs(radius_equation(next, q));
            ++res.iterations;
        }
    }

    int sign_changes = 0;
    double prev = radius_equation(0.5 / 1000.0, q);
    for (int i = 1; i < 1000; ++i) {
        const double cur = radius_equation((i + 0.5) / 1000.0, q);
        if ((prev < 0.0) != (cur < 0.0)) ++sign_changes;
        prev = cur;
    }
    if (sign_changes != 1)
        throw std::runtime_error("radius equation shows " + std::to_string(sign_changes) +
                                 " sign changes on (0, 1); expected a unique root");
    return res;
}

TailSum bohr_tail_sum(const RadialMap& G, const Vector& x, int N, int s_cap,
                      double majorant_df0) {
    if (N < 1) throw std::invalid_argument("tail index N must be at least 1");
    if (s_cap < N) throw std::invalid_argument("series cap must be at least the tail index");
    if (!(majorant_df0 >= 0.0)) throw std::invalid_argument("majorant must be nonnegative");
    const double r = norm(x, G.model);
    if (r >= 1.0) throw std::invalid_argument("point must lie inside the unit ball");

    TailSum out;
    for (int s = N; s <= s_cap; ++s)
        out.partial += std::abs(homogeneous_coeff(G, s - 1, x)) * r;
    out.remainder = majorant_df0 * tail_series(s_cap + 1, r);
    return out;
}

BoundReport rogosinski_check(const RadialMap& F, int m, int N, double r,
                             const std::vector<Vector>& samples, double tol, int s_cap) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (samples.empty()) throw std::invalid_argument("at least one sample direction is required");
    if (m < 1 || N < 1) throw std::invalid_argument("orders m and N must be at least 1");
    if (!(r > 0.0) || r >= 1.0) throw std::invalid_argument("radius must lie inside (0, 1)");
    if (!is_normalized(F))
        throw std::invalid_argument("the inequality check requires a normalized map (f(0) = 1)");
    const auto* pf = std::get_if<ProfileField>(&F.field);
    if (!pf)
        throw std::invalid_argument(
            "the subordination construction needs a profile map (a distinguished direction)");

    const Vector v = support_direction(pf->l, F.model);
    const SchwarzPower V = schwarz_power(F.model, v, m);
    const RadialMap FV = schwarz_compose(F, V, m * (pf->phi.degree() + 1));
    const double df0 = std::abs(scalar_value(F, Vector::Zero(F.model.n)));

    double lhs = 0.0;
    Vector witness;
    for (const Vector& u : samples) {
        const Vector x = r * u;
        const double value = std::abs(scalar_value(FV, x)) * r +
                             bohr_tail_sum(F, x, N, s_cap, df0).total();
        if (value >= lhs) {
            lhs = value;
            witness = u;
        }
    }

    BoundReport rep;
    rep.name = "subordination radius inequality m=" + std::to_string(m) +
               " N=" + std::to_string(N);
    rep.lhs = lhs;
    rep.rhs = 0.25 * df0;
    rep.slack = rep.rhs - rep.lhs;
    rep.attained = std::abs(rep.slack) <= tol;
    rep.passed = rep.slack >= -tol;
    rep.witness_r = r;
    rep.witness_direction = witness;
    rep.note = "image distance replaced by its covered lower bound";
    return rep;
}

}  // namespace radialmaps
