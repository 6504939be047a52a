#include "radialmaps/criteria.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace radialmaps {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_radius(double r) {
    if (!(r > 0.0) || r >= 1.0)
        throw std::invalid_argument("test radius must lie strictly inside (0, 1)");
}

void check_vanishes_at_origin(const TruncatedSeries& h) {
    const double scale = std::max(1.0, h.coeff().cwiseAbs().maxCoeff());
    if (std::abs(h.coeff(0)) > 1e-12 * scale)
        throw std::invalid_argument("slice series must vanish at the origin");
}

// Effective degree after trimming trailing numerically-zero coefficients; -1 if
// the whole polynomial is numerically zero.
int effective_degree(const CoeffVector& c) {
    const double cutoff = 1e-14 * c.cwiseAbs().maxCoeff();
    for (Eigen::Index k = c.size() - 1; k >= 0; --k)
        if (std::abs(c[k]) > cutoff && std::abs(c[k]) > 0.0) return int(k);
    return -1;
}

std::vector<Complex> boundary_values(const TruncatedSeries& h, double r, int grid) {
    std::vector<Complex> out(static_cast<size_t>(grid));
    for (int j = 0; j < grid; ++j) {
        const double th = 2.0 * std::numbers::pi * j / grid;
        out[size_t(j)] = eval(h, Complex(r * std::cos(th), r * std::sin(th)));
    }
    return out;
}

Complex circle_point(double r, int j, int grid) {
    const double th = 2.0 * std::numbers::pi * j / grid;
    return {r * std::cos(th), r * std::sin(th)};
}

// Locates the root of smallest modulus and decides the report if it falls in
// the closed disc (or within the inconclusive band around the circle).
// Otherwise folds the root's distance ratio into the running margin.
bool root_screen_decides(const CoeffVector& coeffs, double r, const char* what,
                         const CriterionConfig& cfg, CriterionReport& rep, double& margin) {
    bool any = false;
    double best = kInf;
    Complex worst{};
    for (const Complex& z : polynomial_roots(coeffs)) {
        const double m = std::abs(z) / r - 1.0;
        if (!any || m < best) {
            best = m;
            worst = z;
        }
        any = true;
    }
    if (!any) return false;
    if (best > 10.0 * cfg.margin) {
        margin = std::min(margin, best);
        return false;
    }
    rep.margin_observed = best;
    rep.witness_zeta = worst;
    if (best < -10.0 * cfg.margin) {
        rep.verdict = Verdict::fails;
        rep.note = std::string(what) + " vanishes inside the disc";
    } else {
        rep.verdict = Verdict::inconclusive;
        rep.note = std::string(what) + " vanishes too close to the test circle";
    }
    return true;
}

Verdict verdict_from_margin(double margin, const CriterionConfig& cfg) {
    if (std::abs(margin) <= 10.0 * cfg.margin) return Verdict::inconclusive;
    return margin > 0.0 ? Verdict::holds : Verdict::fails;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "inconclusive";
    }
}

std::vector<Complex> polynomial_roots(const CoeffVector& coeffs) {
    const int d = effective_degree(coeffs);
    if (d <= 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 1; k < d; ++k) companion(k, k - 1) = 1.0;
    for (int k = 0; k < d; ++k) companion(k, d - 1) = -coeffs[k] / coeffs[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue computation for polynomial roots did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

int zero_count_in_disc(const TruncatedSeries& h, double r, int min_grid) {
    if (!(r > 0.0)) throw std::invalid_argument("zero count needs a positive radius");
    const int d = std::max(effective_degree(h.coeff()), 1);
    for (int grid = std::max({min_grid, 4 * d, 64}); grid <= (1 << 21); grid *= 2) {
        const std::vector<Complex> z = boundary_values(h, r, grid);
        double scale = 0.0;
        for (const Complex& v : z) scale = std::max(scale, std::abs(v));
        if (scale == 0.0)
            throw std::domain_error("argument principle scan hit an identically vanishing curve");
        double total = 0.0, worst_step = 0.0;
        bool near_zero = false;
        for (int j = 0; j < grid; ++j) {
            const Complex a = z[size_t(j)], b = z[size_t((j + 1) % grid)];
            if (std::abs(a) <= 1e-13 * scale) {
                near_zero = true;
                break;
            }
            const double step = std::arg(b / a);
            worst_step = std::max(worst_step, std::abs(step));
            total += step;
        }
        if (near_zero)
            throw std::domain_error("argument principle scan found a zero on the circle");
        if (worst_step > 1.5) continue;  // refine: phase may alias
        const double winding = total / (2.0 * std::numbers::pi);
        const long count = std::lround(winding);
        if (std::abs(winding - double(count)) > 0.25) continue;
        return int(count);
    }
    throw std::domain_error("argument principle scan did not stabilize near radius " +
                            std::to_string(r));
}

CriterionReport univalent_disc(const TruncatedSeries& slice, double r,
                               const CriterionConfig& cfg) {
    check_radius(r);
    check_vanishes_at_origin(slice);
    CriterionReport rep;

    const TruncatedSeries h1 = derivative(slice);
    const int d1 = effective_degree(h1.coeff());
    if (d1 < 0) {
        rep.verdict = Verdict::fails;
        rep.margin_observed = -1.0;
        rep.note = "derivative vanishes identically";
        return rep;
    }
    double margin = kInf;
    if (d1 <= cfg.root_degree_cap) {
        if (root_screen_decides(h1.coeff(), r, "the derivative", cfg, rep, margin)) return rep;
    } else {
        if (zero_count_in_disc(h1, r, cfg.boundary_grid) > 0) {
            rep.verdict = Verdict::fails;
            rep.margin_observed = -1.0;
            rep.note = "derivative has zeros inside the disc (winding count)";
            return rep;
        }
        rep.note = "derivative screened by winding count; ";
    }

    // each probed interior value must be attained exactly once
    const double probe_radii[] = {0.0, 0.45 * r, 0.8 * r};
    for (double rho : probe_radii) {
        const int nang = rho == 0.0 ? 1 : 4;
        for (int a = 0; a < nang; ++a) {
            const Complex z0 = rho * Complex(std::cos(a * std::numbers::pi / 2.0),
                                             std::sin(a * std::numbers::pi / 2.0));
            TruncatedSeries shifted = slice;
            shifted.at(0) -= eval(slice, z0);
            int count = 0;
            try {
                count = zero_count_in_disc(shifted, r, cfg.boundary_grid);
            } catch (const std::domain_error&) {
                rep.verdict = Verdict::inconclusive;
                rep.margin_observed = 0.0;
                rep.witness_zeta = z0;
                rep.note += "value-count scan unstable near the boundary";
                return rep;
            }
            if (count != 1) {
                rep.verdict = Verdict::fails;
                rep.margin_observed = -1.0;
                rep.witness_zeta = z0;
                rep.witness_value = eval(slice, z0);
                rep.note += "a value is attained " + std::to_string(count) + " times";
                return rep;
            }
        }
    }

    // non-adjacent boundary separation, scaled by the radius
    const std::vector<Complex> z = boundary_values(slice, r, cfg.boundary_grid);
    const int G = cfg.boundary_grid;
    double best = kInf;
    int bi = 0, bj = 0;
    for (int i = 0; i < G; ++i)
        for (int j = i + 2; j < G; ++j) {
            if (i == 0 && j == G - 1) continue;  // circularly adjacent
            const double dist = std::abs(z[size_t(i)] - z[size_t(j)]);
            if (dist < best) {
                best = dist;
                bi = i;
                bj = j;
            }
        }
    if (best / r < margin) {
        margin = best / r;
        rep.witness_zeta = circle_point(r, bi, G);
        rep.witness_value = z[size_t(bi)] - z[size_t(bj)];
        rep.note += "closest non-adjacent boundary pair";
    } else {
        rep.note += "derivative root nearest the disc";
    }
    rep.margin_observed = margin;
    rep.verdict = verdict_from_margin(margin, cfg);
    return rep;
}

CriterionReport starlike_disc(const TruncatedSeries& slice, double r, const CriterionConfig& cfg) {
    check_radius(r);
    check_vanishes_at_origin(slice);
    CriterionReport rep;

    if (slice.degree() < 1 || effective_degree(slice.coeff()) < 1) {
        rep.verdict = Verdict::fails;
        rep.margin_observed = -1.0;
        rep.note = "series vanishes identically";
        return rep;
    }
    // h/z and h' must be zero-free in the closed disc
    TruncatedSeries hz = TruncatedSeries::zero(slice.degree() - 1);
    for (int k = 1; k <= slice.degree(); ++k) hz.at(k - 1) = slice.coeff(k);
    const TruncatedSeries h1 = derivative(slice);
    double margin = kInf;
    if (root_screen_decides(hz.coeff(), r, "the series h/z", cfg, rep, margin)) return rep;
    if (root_screen_decides(h1.coeff(), r, "the derivative", cfg, rep, margin)) return rep;

    for (int j = 0; j < cfg.boundary_grid; ++j) {
        const Complex zeta = circle_point(r, j, cfg.boundary_grid);
        const Complex q = zeta * eval(h1, zeta) / eval(slice, zeta);
        const double m = std::min(q.real(), (1.0 / q).real());
        if (m < margin) {
            margin = m;
            rep.witness_zeta = zeta;
            rep.witness_value = q;
        }
    }
    rep.margin_observed = margin;
    rep.verdict = verdict_from_margin(margin, cfg);
    rep.note = "min Re(z h'/h) over the boundary circle";
    return rep;
}

CriterionReport convex_disc(const TruncatedSeries& slice, double r, const CriterionConfig& cfg) {
    check_radius(r);
    CriterionReport rep;

    if (slice.degree() < 1 || effective_degree(slice.coeff()) < 1) {
        rep.verdict = Verdict::fails;
        rep.margin_observed = -1.0;
        rep.note = "series has no linear part";
        return rep;
    }
    const TruncatedSeries h1 = derivative(slice);
    const TruncatedSeries h2 =
        slice.degree() >= 2 ? derivative(h1) : TruncatedSeries::zero(0);
    double margin = kInf;
    if (root_screen_decides(h1.coeff(), r, "the derivative", cfg, rep, margin)) return rep;

    for (int j = 0; j < cfg.boundary_grid; ++j) {
        const Complex zeta = circle_point(r, j, cfg.boundary_grid);
        const Complex q = 1.0 + zeta * eval(h2, zeta) / eval(h1, zeta);
        if (q.real() < margin) {
            margin = q.real();
            rep.witness_zeta = zeta;
            rep.witness_value = q;
        }
    }
    rep.margin_observed = margin;
    rep.verdict = verdict_from_margin(margin, cfg);
    rep.note = "min Re(1 + z h''/h') over the boundary circle";
    return rep;
}

CriterionReport ball_criterion(const RadialMap& F, double r, BallKind kind,
                               const std::vector<Vector>& samples, const CriterionConfig& cfg) {
    check_radius(r);
    if (samples.empty()) throw std::invalid_argument("ball criterion needs at least one direction");
    if (kind == BallKind::quasiconvexB && !is_normalized(F))
        throw std::invalid_argument("quasi-convexity test requires a normalized map (f(0) = 1)");

    CriterionReport worst;
    bool first = true, any_fail = false, any_inconclusive = false;
    for (const Vector& u : samples) {
        const TruncatedSeries slice = slice_series(F, u, cfg.degree);
        CriterionReport rep;
        switch (kind) {
            case BallKind::univalent: rep = univalent_disc(slice, r, cfg); break;
            case BallKind::starlike: rep = starlike_disc(slice, r, cfg); break;
            case BallKind::quasiconvexB: rep = convex_disc(slice, r, cfg); break;
        }
        any_fail |= rep.verdict == Verdict::fails;
        any_inconclusive |= rep.verdict == Verdict::inconclusive;
        if (first || rep.margin_observed < worst.margin_observed) {
            worst = rep;
            worst.witness_direction = u;
            first = false;
        }
    }
    worst.verdict = any_fail ? Verdict::fails
                             : (any_inconclusive ? Verdict::inconclusive : Verdict::holds);
    return worst;
}

CriterionReport starlike_ball_general(const PolyMap& F, double r,
                                      const std::vector<Vector>& points,
                                      const CriterionConfig& cfg) {
    check_radius(r);
    if (points.empty()) throw std::invalid_argument("criterion needs at least one point");
    CriterionReport rep;
    double margin = kInf;
    for (const Vector& x : points) {
        const double nx = x.norm();
        if (nx >= r + 1e-12)
            throw std::invalid_argument("sample point lies outside the test radius");
        if (nx < 1e-12) continue;  // criterion is trivial at the origin
        const Vector Fx = eval(F, x);
        const Eigen::MatrixXcd J = jacobian(F, x);
        const Vector y = Eigen::PartialPivLU<Eigen::MatrixXcd>(J).solve(Fx);
        if ((J * y - Fx).norm() > 1e-10 * (1.0 + Fx.norm())) {
            rep.verdict = Verdict::fails;
            rep.margin_observed = -1.0;
            rep.witness_direction = x;
            rep.note = "derivative is numerically singular at a sample point";
            return rep;
        }
        const double value = (x.dot(y)).real() / nx;
        if (value < margin) {
            margin = value;
            rep.witness_direction = x;
            rep.witness_value = x.dot(y) / nx;
        }
    }
    if (margin == kInf) throw std::invalid_argument("all sample points sit at the origin");
    rep.margin_observed = margin;
    rep.verdict = verdict_from_margin(margin, cfg);
    rep.note = "min Re <DF(x)^{-1}F(x), x/|x|> over sampled points";
    return rep;
}

AlexanderReport alexander_check(const RadialMap& F, double r,
                                const std::vector<Vector>& samples, const CriterionConfig& cfg) {
    if (!is_normalized(F))
        throw std::invalid_argument("equivalence check requires a normalized map (f(0) = 1)");
    AlexanderReport out;
    out.quasiconvex = ball_criterion(F, r, BallKind::quasiconvexB, samples, cfg);
    out.transform_starlike =
        ball_criterion(alexander_transform(F), r, BallKind::starlike, samples, cfg);
    out.comparable = out.quasiconvex.verdict != Verdict::inconclusive &&
                     out.transform_starlike.verdict != Verdict::inconclusive;
    out.agree = out.quasiconvex.verdict == out.transform_starlike.verdict;
    return out;
}

}  // namespace radialmaps
