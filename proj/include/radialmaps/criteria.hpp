#pragma once

#include <string>
#include <vector>

#include "radialmaps/maps.hpp"
#include "radialmaps/series.hpp"

namespace radialmaps {

enum class Verdict { holds, fails, inconclusive };

const char* to_string(Verdict v);

struct CriterionConfig {
    int boundary_grid = 720;    // points per scan circle
    int radial_grid = 24;       // interior radii where a criterion needs them
    double margin = 1e-9;       // strict-inequality tolerance; |m| <= 10*margin -> inconclusive
    int degree = 32;            // slice truncation degree
    int root_degree_cap = 512;  // companion-matrix roots up to here; winding counts beyond
};

struct CriterionReport {
    Verdict verdict = Verdict::inconclusive;
    double margin_observed = 0.0;
    Complex witness_zeta{};    // worst disc point (or offending root)
    Complex witness_value{};   // tested quantity there
    Vector witness_direction;  // ball-level tests: worst direction; empty for disc tests
    std::string note;
};

/// Roots of c_0 + c_1 z + ... (trailing coefficients below 1e-14 relative are trimmed).
std::vector<Complex> polynomial_roots(const CoeffVector& coeffs);

/// Number of zeros of h in |z| < r, counted with multiplicity, by the argument
/// principle on an adaptively refined circle grid.
int zero_count_in_disc(const TruncatedSeries& h, double r, int min_grid = 256);

/// Heuristic univalence: derivative roots outside the disc, injective boundary
/// curve (non-adjacent pairwise separation), and each probed value attained once.
CriterionReport univalent_disc(const TruncatedSeries& slice, double r, const CriterionConfig& cfg);
/// min Re(z h'/h) on |z| = r (and of the reciprocal), after excluding zeros of
/// h/z and h' from the disc; boundary-only by the harmonic minimum principle.
CriterionReport starlike_disc(const TruncatedSeries& slice, double r, const CriterionConfig& cfg);
/// min Re(1 + z h''/h') on |z| = r after excluding zeros of h' from the disc.
CriterionReport convex_disc(const TruncatedSeries& slice, double r, const CriterionConfig& cfg);

enum class BallKind { univalent, starlike, quasiconvexB };

/// Ball-level criterion via slices: the disc test of the matching kind must
/// hold on every sampled direction; worst slice reported.
CriterionReport ball_criterion(const RadialMap& F, double r, BallKind kind,
                               const std::vector<Vector>& samples, const CriterionConfig& cfg);

/// Direct criterion for general polynomial maps on the Euclidean ball:
/// min over sampled points of Re <DF(x)^{-1} F(x), x/|x|>.
CriterionReport starlike_ball_general(const PolyMap& F, double r,
                                      const std::vector<Vector>& points,
                                      const CriterionConfig& cfg);

struct AlexanderReport {
    CriterionReport quasiconvex;         // type-B quasi-convexity of F
    CriterionReport transform_starlike;  // starlikeness of G(x) = DF(x)x
    bool comparable = false;             // neither verdict inconclusive
    bool agree = false;
};

/// Equivalence probe: quasi-convexity of F against starlikeness of DF(x)x.
AlexanderReport alexander_check(const RadialMap& F, double r,
                                const std::vector<Vector>& samples, const CriterionConfig& cfg);

}  // namespace radialmaps
