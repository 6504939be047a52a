#pragma once

#include <variant>
#include <vector>

#include "radialmaps/norms.hpp"
#include "radialmaps/series.hpp"

namespace radialmaps {

/// One monomial a * x1^e1 * ... * xn^en.
struct PolyTerm {
    Eigen::VectorXi exponents;
    Complex coefficient;
};

/// Sparse multivariate polynomial over C^n with canonically ordered terms
/// (graded lexicographic); duplicate exponents are combined on construction.
class MultiPoly {
public:
    MultiPoly(int vars, std::vector<PolyTerm> terms);

    int vars() const { return vars_; }
    int total_degree() const;
    const std::vector<PolyTerm>& terms() const { return terms_; }

private:
    int vars_;
    std::vector<PolyTerm> terms_;
};

Complex eval(const MultiPoly& f, const Vector& x);
/// d f / d x_j evaluated at x.
Complex eval_partial(const MultiPoly& f, int j, const Vector& x);
/// Degree-k homogeneous part evaluated at x.
Complex eval_homogeneous(const MultiPoly& f, int k, const Vector& x);
/// Product with a total-degree cap; exceeding the cap is an error.
MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, int degree_cap);
MultiPoly scale(const MultiPoly& f, Complex c);
MultiPoly add(const MultiPoly& a, const MultiPoly& b);
/// (w . x)^k expanded over n variables.
MultiPoly linear_form_power(const Vector& w, int k, int degree_cap);

/// f(x) = phi(l(x)) for a linear form l of dual norm <= 1.
struct ProfileField {
    TruncatedSeries phi;
    SupportFunctional l;
};

struct PolyField {
    MultiPoly f;
};

using ScalarField = std::variant<ProfileField, PolyField>;

/// F(x) = f(x) * x on the unit ball of the l^p model.
struct RadialMap {
    NormModel model;
    ScalarField field;
};

/// |f(0) - 1| <= 1e-12.
bool is_normalized(const RadialMap& F);
Complex scalar_value(const RadialMap& F, const Vector& x);       // f(x)
Complex radial_derivative(const RadialMap& F, const Vector& x);  // Df(x)x
Complex radial_second(const RadialMap& F, const Vector& x);      // D^2 f(x)(x,x)
Vector evaluate(const RadialMap& F, const Vector& x);            // f(x) * x
/// DF(x) xi = f(x) xi + (Df(x) xi) x.
Vector df_action(const RadialMap& F, const Vector& x, const Vector& xi);
/// Coefficient Q_k(x) of the degree-(k+1) homogeneous part P_{k+1}(x) = Q_k(x) x.
Complex homogeneous_coeff(const RadialMap& F, int k, const Vector& x);
/// Sum of P_s(x) for s = 1..max_s; cross-check against evaluate().
Vector eval_via_homogeneous(const RadialMap& F, const Vector& x, int max_s);

/// Coefficients of f_u(z) = z * f(z u) up to the given degree; u must be unit.
TruncatedSeries slice_series(const RadialMap& F, const Vector& u, int degree);
/// f(x) / (f(x) + Df(x)x); the scalar c with [DF(x)]^{-1} F(x) = c x.
Complex inverse_transfer_scalar(const RadialMap& F, const Vector& x);
/// (2 Df(x)x + D^2 f(x)(x,x)) / (f(x) + Df(x)x) + 1; requires normalized F.
Complex quasiconvex_scalar(const RadialMap& F, const Vector& x);
/// max over samples of |Q_{s-1}(u)|; equals sup ||P_s(u)|| over the sampled sphere.
double homogeneous_sup(const RadialMap& F, int s, const std::vector<Vector>& samples);
/// G with g = f + Df(.)x, i.e. degree-k parts scaled by (1+k).
RadialMap alexander_transform(const RadialMap& F);

/// V(x) = l_v(x)^(m-1) x; homogeneous Schwarz map of order m >= 1.
struct SchwarzPower {
    Vector v;
    SupportFunctional lv;
    int m = 1;
};
SchwarzPower schwarz_power(const NormModel& model, const Vector& v, int m);
Vector apply(const SchwarzPower& V, const Vector& x);

/// F composed with V. Profile fields sharing V's functional compose exactly
/// (profile t -> phi(t^m) t^(m-1)); Poly fields expand under a degree cap.
RadialMap schwarz_compose(const RadialMap& F, const SchwarzPower& V, int degree_cap = 256);

RadialMap koebe_map(const NormModel& model, const Vector& v,
                    int degree = TruncatedSeries::kDefaultDegree);
RadialMap profile_map(const NormModel& model, const Vector& v, TruncatedSeries phi);
RadialMap poly_field_map(const NormModel& model, MultiPoly f);
/// Expand a Profile field into a Poly field (exact up to the phi degree).
RadialMap to_poly(const RadialMap& F, int degree_cap);
/// Recover the unit direction v whose support functional equals F's linear form.
Vector support_direction(const SupportFunctional& l, const NormModel& model);

/// General polynomial map C^n -> C^n (componentwise MultiPoly).
struct PolyMap {
    std::vector<MultiPoly> components;
};
Vector eval(const PolyMap& F, const Vector& x);
Eigen::MatrixXcd jacobian(const PolyMap& F, const Vector& x);
/// Componentwise expansion of f(x) * x.
PolyMap to_poly_map(const RadialMap& F, int degree_cap);

}  // namespace radialmaps
