#include "radialmaps/bounds.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace radialmaps {

namespace {

constexpr double kInvSqrt3 = 0.57735026918962576451;

void check_tol(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

void check_radii(const std::vector<double>& radii) {
    if (radii.empty()) throw std::invalid_argument("at least one radius is required");
    for (double r : radii)
        if (!(r > 0.0) || r >= 1.0)
            throw std::invalid_argument("radii must lie strictly inside (0, 1)");
}

void check_samples(const std::vector<Vector>& samples) {
    if (samples.empty()) throw std::invalid_argument("at least one sample direction is required");
}

BoundReport report(std::string name, double lhs, double rhs, double tol) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.attained = std::abs(r.slack) <= tol;
    r.passed = r.slack >= -tol;
    return r;
}

struct Extremes {
    double min_value = 0.0, max_value = 0.0;
    Vector argmin, argmax;
};

template <class Fn>
Extremes scan_directions(const std::vector<Vector>& samples, Fn&& value) {
    Extremes e;
    bool first = true;
    for (const Vector& u : samples) {
        const double v = value(u);
        if (first || v < e.min_value) {
            e.min_value = v;
            e.argmin = u;
        }
        if (first || v > e.max_value) {
            e.max_value = v;
            e.argmax = u;
        }
        first = false;
    }
    return e;
}

double min_boundary_modulus(const RadialMap& F, double r, const std::vector<Vector>& samples,
                            int grid, Vector& argmin) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vector& u : samples) {
        for (int j = 0; j < grid; ++j) {
            const double th = 2.0 * std::numbers::pi * j / grid;
            const Complex zeta(r * std::cos(th), r * std::sin(th));
            const double v = std::abs(zeta * scalar_value(F, zeta * u));
            if (v < best) {
                best = v;
                argmin = u;
            }
        }
    }
    return best;
}

void require_unit_bloch(const RadialMap& F, const std::vector<Vector>& samples) {
    if (!is_normalized(F))
        throw std::domain_error("map is outside the unit Bloch class: f(0) differs from 1");
    const double sn = bloch_seminorm(F, samples, 256, 96);
    if (std::abs(sn - 1.0) > 1e-3)
        throw std::domain_error("map is outside the unit Bloch class: seminorm estimate " +
                                std::to_string(sn));
}

}  // namespace

std::vector<BoundReport> check_bieberbach(const RadialMap& F, const RadialMap& G, int s_max,
                                          const std::vector<Vector>& samples, double tol) {
    check_tol(tol);
    check_samples(samples);
    if (s_max < 1) throw std::invalid_argument("coefficient bound needs s_max >= 1");
    const double df0 = std::abs(scalar_value(F, Vector::Zero(F.model.n)));
    std::vector<BoundReport> out;
    out.reserve(size_t(s_max));
    for (int s = 1; s <= s_max; ++s) {
        double best = 0.0;
        Vector arg;
        for (const Vector& u : samples) {
            const double v = std::abs(homogeneous_coeff(G, s - 1, u));
            if (v >= best) {
                best = v;
                arg = u;
            }
        }
        BoundReport r = report("coefficient bound s=" + std::to_string(s), best, s * df0, tol);
        r.witness_direction = arg;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BoundReport> check_growth(const RadialMap& F, const std::vector<Vector>& samples,
                                      const std::vector<double>& radii, double tol) {
    check_tol(tol);
    check_samples(samples);
    check_radii(radii);
    std::vector<BoundReport> out;
    for (double r : radii) {
        const Extremes e = scan_directions(
            samples, [&](const Vector& u) { return r * std::abs(scalar_value(F, r * u)); });
        BoundReport lower =
            report("growth lower r=" + std::to_string(r), r / ((1 + r) * (1 + r)), e.min_value, tol);
        lower.witness_r = r;
        lower.witness_direction = e.argmin;
        BoundReport upper =
            report("growth upper r=" + std::to_string(r), e.max_value, r / ((1 - r) * (1 - r)), tol);
        upper.witness_r = r;
        upper.witness_direction = e.argmax;
        out.push_back(std::move(lower));
        out.push_back(std::move(upper));
    }
    return out;
}

BoundReport covering_margin(const RadialMap& F, double r, const std::vector<Vector>& samples,
                            int grid, double tol) {
    check_tol(tol);
    check_samples(samples);
    if (!(r > 0.0) || r >= 1.0) throw std::invalid_argument("radius must lie inside (0, 1)");
    if (grid < 8) throw std::invalid_argument("boundary grid too coarse");
    Vector argmin;
    const double growth_floor = r / ((1 + r) * (1 + r));
    const double observed = min_boundary_modulus(F, r, samples, grid, argmin);
    BoundReport rep = report("covering r=" + std::to_string(r), growth_floor, observed, tol);
    rep.witness_r = r;
    rep.witness_direction = argmin;
    rep.note = "covered ball radius vs growth floor";
    return rep;
}

std::vector<BoundReport> check_distortion_ray(const RadialMap& F,
                                              const std::vector<Vector>& samples,
                                              const std::vector<double>& radii, double tol) {
    check_tol(tol);
    check_samples(samples);
    check_radii(radii);
    std::vector<BoundReport> out;
    for (double r : radii) {
        const Extremes e = scan_directions(samples, [&](const Vector& u) {
            const Vector x = r * u;
            return norm(df_action(F, x, x), F.model);
        });
        const double lo = r * (1 - r) / std::pow(1 + r, 3);
        const double hi = r * (1 + r) / std::pow(1 - r, 3);
        BoundReport lower = report("ray distortion lower r=" + std::to_string(r), lo, e.min_value, tol);
        lower.witness_r = r;
        lower.witness_direction = e.argmin;
        BoundReport upper = report("ray distortion upper r=" + std::to_string(r), e.max_value, hi, tol);
        upper.witness_r = r;
        upper.witness_direction = e.argmax;
        out.push_back(std::move(lower));
        out.push_back(std::move(upper));
    }
    return out;
}

double operator_norm_df(const RadialMap& F, const Vector& x) {
    if (F.model.p != 2.0)
        throw std::invalid_argument("operator norm is implemented for the Euclidean model only");
    if (x.size() != F.model.n) throw std::invalid_argument("point dimension mismatch");
    const Complex f = scalar_value(F, x);

    // gradient g with Df(x)xi = sum_j g_j xi_j
    Vector g = Vector::Zero(F.model.n);
    if (const auto* pf = std::get_if<ProfileField>(&F.field)) {
        const TruncatedSeries d1 =
            pf->phi.degree() >= 1 ? derivative(pf->phi) : TruncatedSeries::zero(0);
        g = eval(d1, pf->l(x)) * pf->l.w;
    } else {
        const MultiPoly& f_poly = std::get<PolyField>(F.field).f;
        for (int j = 0; j < F.model.n; ++j) g[j] = eval_partial(f_poly, j, x);
    }

    // DF = f I + x g^T acts as f I off span{x, conj(g)}; restrict there.
    const Vector cg = g.conjugate();
    std::vector<Vector> basis;
    for (const Vector& cand : {x, cg}) {
        Vector w = cand;
        for (const Vector& q : basis) w -= q * q.dot(cand);
        const double nw = w.norm();
        if (nw > 1e-13 * std::max(1.0, cand.norm())) basis.push_back(w / nw);
    }
    if (basis.empty()) return std::abs(f);

    const auto k = Eigen::Index(basis.size());
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        const Complex gq = cg.dot(basis[size_t(j)]);  // = g^T q_j
        for (Eigen::Index i = 0; i < k; ++i) {
            M(i, j) = gq * basis[size_t(i)].dot(x);
            if (i == j) M(i, j) += f;
        }
    }
    const double sigma = Eigen::JacobiSVD<Eigen::MatrixXcd>(M).singularValues()(0);
    return k < F.model.n ? std::max(std::abs(f), sigma) : sigma;
}

std::vector<BoundReport> check_distortion_hilbert(const RadialMap& F,
                                                  const std::vector<Vector>& samples,
                                                  const std::vector<double>& radii, double tol) {
    check_tol(tol);
    check_samples(samples);
    check_radii(radii);
    std::vector<BoundReport> out;
    for (double r : radii) {
        const Extremes e = scan_directions(
            samples, [&](const Vector& u) { return operator_norm_df(F, r * u); });
        const double lo = (1 - r) / std::pow(1 + r, 3);
        const double hi = (1 + r) / std::pow(1 - r, 3);
        BoundReport lower =
            report("operator distortion lower r=" + std::to_string(r), lo, e.min_value, tol);
        lower.witness_r = r;
        lower.witness_direction = e.argmin;
        BoundReport upper =
            report("operator distortion upper r=" + std::to_string(r), e.max_value, hi, tol);
        upper.witness_r = r;
        upper.witness_direction = e.argmax;
        out.push_back(std::move(lower));
        out.push_back(std::move(upper));
    }
    return out;
}

BoundReport fekete_szego(const RadialMap& F, const Vector& u, double lambda, double tol) {
    check_tol(tol);
    if (!(lambda >= 0.0) || lambda >= 1.0)
        throw std::invalid_argument("the weight must lie in [0, 1)");
    if (!is_normalized(F))
        throw std::invalid_argument("coefficient functional requires a normalized map (f(0) = 1)");
    if (std::abs(norm(u, F.model) - 1.0) > 1e-10)
        throw std::invalid_argument("direction must be a unit vector");
    const Complex q1 = homogeneous_coeff(F, 1, u);
    const Complex q2 = homogeneous_coeff(F, 2, u);
    const double lhs = std::abs(q2 - lambda * q1 * q1);
    const double rhs = 1.0 + 2.0 * std::exp(-2.0 * lambda / (1.0 - lambda));
    BoundReport rep = report("second coefficient functional", lhs, rhs, tol);
    rep.witness_direction = u;
    rep.note = "weight " + std::to_string(lambda);
    return rep;
}

double bloch_seminorm(const RadialMap& F, const std::vector<Vector>& samples, int radial_grid,
                      int angle_grid) {
    check_samples(samples);
    if (radial_grid < 1 || angle_grid < 1) throw std::invalid_argument("grids must be positive");
    double sup = 0.0;
    for (const Vector& u : samples) {
        for (int i = 0; i <= radial_grid; ++i) {
            const double rho = double(i) / (radial_grid + 1);
            const double weight = 1.0 - rho * rho;
            const int nang = i == 0 ? 1 : angle_grid;
            for (int j = 0; j < nang; ++j) {
                const double th = 2.0 * std::numbers::pi * j / nang;
                const Vector x = Complex(rho * std::cos(th), rho * std::sin(th)) * u;
                // f_u'(z) = f(x) + Df(x)x along the slice
                const double v =
                    weight * std::abs(scalar_value(F, x) + radial_derivative(F, x));
                sup = std::max(sup, v);
            }
        }
    }
    return sup;
}

BoundReport check_bonk(const RadialMap& F, const std::vector<Vector>& samples, int radial_grid,
                       int angle_grid, double tol) {
    check_tol(tol);
    check_samples(samples);
    if (radial_grid < 1 || angle_grid < 1) throw std::invalid_argument("grids must be positive");
    require_unit_bloch(F, samples);

    double worst_slack = std::numeric_limits<double>::infinity();
    BoundReport rep;
    for (const Vector& u : samples) {
        for (int i = 1; i <= radial_grid; ++i) {
            const double rho = kInvSqrt3 * double(i) / radial_grid;
            const double bound =
                rho * (1.0 - std::sqrt(3.0) * rho) / std::pow(1.0 - rho * kInvSqrt3, 3);
            for (int j = 0; j < angle_grid; ++j) {
                const double th = 2.0 * std::numbers::pi * j / angle_grid;
                const Vector x = Complex(rho * std::cos(th), rho * std::sin(th)) * u;
                const double lhs =
                    rho * (scalar_value(F, x) + radial_derivative(F, x)).real();
                if (lhs - bound < worst_slack) {
                    worst_slack = lhs - bound;
                    rep.lhs = bound;
                    rep.rhs = lhs;
                    rep.witness_r = rho;
                    rep.witness_direction = u;
                }
            }
        }
    }
    rep.name = "radial lower distortion on the Bloch class";
    rep.slack = worst_slack;
    rep.attained = std::abs(worst_slack) <= tol;
    rep.passed = worst_slack >= -tol;
    return rep;
}

BoundReport bloch_schlicht_check(const RadialMap& F, const std::vector<Vector>& samples,
                                 const CriterionConfig& cfg, double tol) {
    check_tol(tol);
    check_samples(samples);
    require_unit_bloch(F, samples);

    const CriterionReport uni = ball_criterion(F, kInvSqrt3, BallKind::univalent, samples, cfg);
    Vector argmin;
    const double observed =
        min_boundary_modulus(F, kInvSqrt3, samples, cfg.boundary_grid, argmin);
    BoundReport rep = report("schlicht ball radius", std::sqrt(3.0) / 4.0, observed, tol);
    rep.witness_r = kInvSqrt3;
    rep.witness_direction = argmin;
    rep.passed = rep.passed && uni.verdict == Verdict::holds;
    rep.note = std::string("univalence on the test ball: ") + to_string(uni.verdict);
    return rep;
}

}  // namespace radialmaps
