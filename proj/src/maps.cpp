#include "radialmaps/maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace radialmaps {

namespace {

Complex cpow_int(Complex base, int k) {
    // binary exponentiation; 0^0 = 1 by convention
    Complex acc(1.0, 0.0);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

int term_degree(const PolyTerm& t) { return t.exponents.sum(); }

bool graded_lex_less(const PolyTerm& a, const PolyTerm& b) {
    const int da = term_degree(a), db = term_degree(b);
    if (da != db) return da < db;
    for (Eigen::Index i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
    return false;
}

void check_point_dim(const char* what, Eigen::Index got, Eigen::Index want) {
    if (got != want)
        throw std::invalid_argument(std::string(what) + ": point has dimension " +
                                    std::to_string(got) + ", expected " + std::to_string(want));
}

void check_unit(const Vector& v, const NormModel& model, const char* what) {
    if (std::abs(norm(v, model) - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(what) + " must be a unit vector");
}

}  // namespace

MultiPoly::MultiPoly(int vars, std::vector<PolyTerm> terms) : vars_(vars) {
    if (vars < 1) throw std::invalid_argument("polynomial needs at least one variable");
    for (const auto& t : terms) {
        if (t.exponents.size() != vars)
            throw std::invalid_argument("term exponent count does not match variable count");
        if ((t.exponents.array() < 0).any())
            throw std::invalid_argument("negative exponent in polynomial term");
    }
    std::sort(terms.begin(), terms.end(), graded_lex_less);
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().exponents == t.exponents)
            terms_.back().coefficient += t.coefficient;
        else
            terms_.push_back(std::move(t));
    }
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const PolyTerm& t) { return t.coefficient == Complex(0.0); }),
                 terms_.end());
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, term_degree(t));
    return d;
}

Complex eval(const MultiPoly& f, const Vector& x) {
    check_point_dim("polynomial evaluation", x.size(), f.vars());
    Complex sum(0.0);
    for (const auto& t : f.terms()) {
        Complex m = t.coefficient;
        for (int j = 0; j < f.vars(); ++j)
            if (t.exponents[j] > 0) m *= cpow_int(x[j], t.exponents[j]);
        sum += m;
    }
    return sum;
}

Complex eval_partial(const MultiPoly& f, int j, const Vector& x) {
    check_point_dim("polynomial evaluation", x.size(), f.vars());
    if (j < 0 || j >= f.vars()) throw std::invalid_argument("partial derivative index out of range");
    Complex sum(0.0);
    for (const auto& t : f.terms()) {
        const int e = t.exponents[j];
        if (e == 0) continue;
        Complex m = t.coefficient * double(e) * cpow_int(x[j], e - 1);
        for (int i = 0; i < f.vars(); ++i)
            if (i != j && t.exponents[i] > 0) m *= cpow_int(x[i], t.exponents[i]);
        sum += m;
    }
    return sum;
}

Complex eval_homogeneous(const MultiPoly& f, int k, const Vector& x) {
    check_point_dim("polynomial evaluation", x.size(), f.vars());
    Complex sum(0.0);
    for (const auto& t : f.terms()) {
        if (term_degree(t) != k) continue;
        Complex m = t.coefficient;
        for (int j = 0; j < f.vars(); ++j)
            if (t.exponents[j] > 0) m *= cpow_int(x[j], t.exponents[j]);
        sum += m;
    }
    return sum;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, int degree_cap) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("polynomial product requires matching variable counts");
    if (!a.terms().empty() && !b.terms().empty() &&
        a.total_degree() + b.total_degree() > degree_cap)
        throw std::domain_error("polynomial degree cap exceeded: product has degree " +
                                std::to_string(a.total_degree() + b.total_degree()) +
                                " > cap " + std::to_string(degree_cap));
    std::vector<PolyTerm> out;
    out.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out.push_back({ta.exponents + tb.exponents, ta.coefficient * tb.coefficient});
    return MultiPoly(a.vars(), std::move(out));
}

MultiPoly scale(const MultiPoly& f, Complex c) {
    std::vector<PolyTerm> out = f.terms();
    for (auto& t : out) t.coefficient *= c;
    return MultiPoly(f.vars(), std::move(out));
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("polynomial sum requires matching variable counts");
    std::vector<PolyTerm> out = a.terms();
    out.insert(out.end(), b.terms().begin(), b.terms().end());
    return MultiPoly(a.vars(), std::move(out));
}

namespace {

// Recursively distribute degree k over the remaining variables of (w . x)^k,
// carrying the multinomial weight and the accumulated w power.
void expand_linear_power(const Vector& w, int j, int remaining, double multinomial,
                         Complex wpow, Eigen::VectorXi& expo, std::vector<PolyTerm>& out) {
    const auto n = w.size();
    if (j == n - 1) {
        if (remaining > 0 && w[j] == Complex(0.0)) return;
        expo[j] = remaining;
        // multinomial still needs the final factor C(remaining, remaining) = 1
        out.push_back({expo, multinomial * wpow * cpow_int(w[j], remaining)});
        expo[j] = 0;
        return;
    }
    const int top = (w[j] == Complex(0.0)) ? 0 : remaining;
    for (int e = 0; e <= top; ++e) {
        // running multinomial: multiply by C(remaining, e)
        double c = 1.0;
        for (int i = 0; i < e; ++i) c = c * double(remaining - i) / double(i + 1);
        expo[j] = e;
        expand_linear_power(w, j + 1, remaining - e, multinomial * c,
                            wpow * cpow_int(w[j], e), expo, out);
        expo[j] = 0;
    }
}

}  // namespace

MultiPoly linear_form_power(const Vector& w, int k, int degree_cap) {
    if (w.size() < 1) throw std::invalid_argument("linear form needs at least one variable");
    if (k < 0) throw std::invalid_argument("negative power of a linear form");
    if (k > degree_cap)
        throw std::domain_error("polynomial degree cap exceeded: power " + std::to_string(k) +
                                " > cap " + std::to_string(degree_cap));
    std::vector<PolyTerm> out;
    Eigen::VectorXi expo = Eigen::VectorXi::Zero(w.size());
    expand_linear_power(w, 0, k, 1.0, Complex(1.0), expo, out);
    return MultiPoly(int(w.size()), std::move(out));
}

namespace {

const ProfileField* as_profile(const RadialMap& F) { return std::get_if<ProfileField>(&F.field); }
const PolyField* as_poly(const RadialMap& F) { return std::get_if<PolyField>(&F.field); }

// phi', phi'' as series; a constant profile has zero derivatives
TruncatedSeries profile_derivative(const TruncatedSeries& phi) {
    if (phi.degree() == 0) return TruncatedSeries::zero(0);
    return derivative(phi);
}

}  // namespace

bool is_normalized(const RadialMap& F) {
    Complex f0;
    if (const auto* pf = as_profile(F))
        f0 = pf->phi.coeff(0);
    else
        f0 = eval_homogeneous(as_poly(F)->f, 0, Vector::Zero(F.model.n));
    return std::abs(f0 - Complex(1.0)) <= 1e-12;
}

Complex scalar_value(const RadialMap& F, const Vector& x) {
    check_point_dim("radial map", x.size(), F.model.n);
    if (const auto* pf = as_profile(F)) return eval(pf->phi, pf->l(x));
    return eval(as_poly(F)->f, x);
}

Complex radial_derivative(const RadialMap& F, const Vector& x) {
    check_point_dim("radial map", x.size(), F.model.n);
    if (const auto* pf = as_profile(F)) {
        const Complex t = pf->l(x);
        return eval(profile_derivative(pf->phi), t) * t;
    }
    // Euler: the degree-k part contributes k * f_k(x)
    const MultiPoly& f = as_poly(F)->f;
    Complex sum(0.0);
    for (int k = 1; k <= f.total_degree(); ++k) sum += double(k) * eval_homogeneous(f, k, x);
    return sum;
}

Complex radial_second(const RadialMap& F, const Vector& x) {
    check_point_dim("radial map", x.size(), F.model.n);
    if (const auto* pf = as_profile(F)) {
        const Complex t = pf->l(x);
        return eval(profile_derivative(profile_derivative(pf->phi)), t) * t * t;
    }
    const MultiPoly& f = as_poly(F)->f;
    Complex sum(0.0);
    for (int k = 2; k <= f.total_degree(); ++k)
        sum += double(k) * double(k - 1) * eval_homogeneous(f, k, x);
    return sum;
}

Vector evaluate(const RadialMap& F, const Vector& x) { return scalar_value(F, x) * x; }

Vector df_action(const RadialMap& F, const Vector& x, const Vector& xi) {
    check_point_dim("radial map", x.size(), F.model.n);
    check_point_dim("radial map", xi.size(), F.model.n);
    Complex dfxi;
    if (const auto* pf = as_profile(F)) {
        dfxi = eval(profile_derivative(pf->phi), pf->l(x)) * pf->l(xi);
    } else {
        const MultiPoly& f = as_poly(F)->f;
        dfxi = Complex(0.0);
        for (int j = 0; j < F.model.n; ++j)
            if (xi[j] != Complex(0.0)) dfxi += eval_partial(f, j, x) * xi[j];
    }
    return scalar_value(F, x) * xi + dfxi * x;
}

Complex homogeneous_coeff(const RadialMap& F, int k, const Vector& x) {
    check_point_dim("radial map", x.size(), F.model.n);
    if (k < 0) throw std::invalid_argument("homogeneous index must be nonnegative");
    if (const auto* pf = as_profile(F)) {
        if (k > pf->phi.degree()) return Complex(0.0);
        return pf->phi.coeff(k) * cpow_int(pf->l(x), k);
    }
    return eval_homogeneous(as_poly(F)->f, k, x);
}

Vector eval_via_homogeneous(const RadialMap& F, const Vector& x, int max_s) {
    if (max_s < 1) throw std::invalid_argument("homogeneous expansion needs at least one part");
    Complex sum(0.0);
    for (int s = 1; s <= max_s; ++s) sum += homogeneous_coeff(F, s - 1, x);
    return sum * x;
}

TruncatedSeries slice_series(const RadialMap& F, const Vector& u, int degree) {
    check_point_dim("radial map", u.size(), F.model.n);
    check_unit(u, F.model, "slice direction");
    if (degree < 1) throw std::invalid_argument("slice series needs degree at least 1");
    TruncatedSeries s = TruncatedSeries::zero(degree);
    for (int k = 0; k + 1 <= degree; ++k) s.at(k + 1) = homogeneous_coeff(F, k, u);
    return s;
}

Complex inverse_transfer_scalar(const RadialMap& F, const Vector& x) {
    const Complex f = scalar_value(F, x);
    const Complex den = f + radial_derivative(F, x);
    if (std::abs(den) <= 1e-14)
        throw std::domain_error("radial transfer is degenerate: f(x) + Df(x)x vanishes");
    return f / den;
}

Complex quasiconvex_scalar(const RadialMap& F, const Vector& x) {
    if (!is_normalized(F))
        throw std::invalid_argument("quasi-convexity scalar requires a normalized map (f(0) = 1)");
    const Complex den = scalar_value(F, x) + radial_derivative(F, x);
    if (std::abs(den) <= 1e-14)
        throw std::domain_error("radial transfer is degenerate: f(x) + Df(x)x vanishes");
    return Complex(1.0) + (2.0 * radial_derivative(F, x) + radial_second(F, x)) / den;
}

double homogeneous_sup(const RadialMap& F, int s, const std::vector<Vector>& samples) {
    if (s < 1) throw std::invalid_argument("homogeneous part index must be at least 1");
    if (samples.empty()) throw std::invalid_argument("homogeneous sup needs at least one sample");
    double best = 0.0;
    for (const auto& u : samples) best = std::max(best, std::abs(homogeneous_coeff(F, s - 1, u)));
    return best;
}

RadialMap alexander_transform(const RadialMap& F) {
    if (const auto* pf = as_profile(F)) {
        TruncatedSeries psi = pf->phi;
        for (int k = 0; k <= psi.degree(); ++k) psi.at(k) *= double(1 + k);
        return RadialMap{F.model, ProfileField{std::move(psi), pf->l}};
    }
    std::vector<PolyTerm> out = as_poly(F)->f.terms();
    for (auto& t : out) t.coefficient *= double(1 + term_degree(t));
    return RadialMap{F.model, PolyField{MultiPoly(F.model.n, std::move(out))}};
}

SchwarzPower schwarz_power(const NormModel& model, const Vector& v, int m) {
    check_point_dim("Schwarz power", v.size(), model.n);
    check_unit(v, model, "Schwarz power direction");
    if (m < 1) throw std::invalid_argument("Schwarz power order must be at least 1");
    return SchwarzPower{v, support_functional(v, model), m};
}

Vector apply(const SchwarzPower& V, const Vector& x) {
    return cpow_int(V.lv(x), V.m - 1) * x;
}

RadialMap schwarz_compose(const RadialMap& F, const SchwarzPower& V, int degree_cap) {
    if (const auto* pf = as_profile(F)) {
        const bool same = pf->l.w.size() == V.lv.w.size() &&
                          (pf->l.w - V.lv.w).cwiseAbs().maxCoeff() <= 1e-12;
        if (!same)
            throw std::invalid_argument(
                "profile composition requires the Schwarz power to share the profile's "
                "linear functional; convert the map with to_poly first");
        // l(V(x)) = l(x)^m, so f(V(x)) V(x) = [phi(l(x)^m) l(x)^(m-1)] x
        const int d = V.m * pf->phi.degree() + V.m - 1;
        if (d > degree_cap)
            throw std::domain_error("polynomial degree cap exceeded: composition has degree " +
                                    std::to_string(d) + " > cap " + std::to_string(degree_cap));
        TruncatedSeries psi = TruncatedSeries::zero(d);
        for (int k = 0; k <= pf->phi.degree(); ++k)
            psi.at(V.m * k + V.m - 1) = pf->phi.coeff(k);
        return RadialMap{F.model, ProfileField{std::move(psi), pf->l}};
    }
    // general path: g(x) = f(V(x)) lv(x)^(m-1), expanded term by term
    const MultiPoly& f = as_poly(F)->f;
    const int n = F.model.n;
    std::vector<PolyTerm> acc;
    for (const auto& t : f.terms()) {
        const int k = term_degree(t);
        // lv^((m-1)k) times the original monomial
        MultiPoly part = multiply(linear_form_power(V.lv.w, (V.m - 1) * k, degree_cap),
                                  MultiPoly(n, {t}), degree_cap);
        acc.insert(acc.end(), part.terms().begin(), part.terms().end());
    }
    MultiPoly g = multiply(MultiPoly(n, std::move(acc)),
                           linear_form_power(V.lv.w, V.m - 1, degree_cap), degree_cap);
    return RadialMap{F.model, PolyField{std::move(g)}};
}

RadialMap koebe_map(const NormModel& model, const Vector& v, int degree) {
    check_point_dim("radial map", v.size(), model.n);
    check_unit(v, model, "map direction");
    TruncatedSeries phi = TruncatedSeries::zero(degree);
    for (int k = 0; k <= degree; ++k) phi.at(k) = double(k + 1);  // 1/(1-t)^2
    return RadialMap{model, ProfileField{std::move(phi), support_functional(v, model)}};
}

RadialMap profile_map(const NormModel& model, const Vector& v, TruncatedSeries phi) {
    check_point_dim("radial map", v.size(), model.n);
    check_unit(v, model, "map direction");
    return RadialMap{model, ProfileField{std::move(phi), support_functional(v, model)}};
}

RadialMap poly_field_map(const NormModel& model, MultiPoly f) {
    if (f.vars() != model.n)
        throw std::invalid_argument("polynomial variable count does not match model dimension");
    return RadialMap{model, PolyField{std::move(f)}};
}

RadialMap to_poly(const RadialMap& F, int degree_cap) {
    const auto* pf = as_profile(F);
    if (!pf) return F;
    if (pf->phi.degree() > degree_cap)
        throw std::domain_error("polynomial degree cap exceeded: profile has degree " +
                                std::to_string(pf->phi.degree()) + " > cap " +
                                std::to_string(degree_cap));
    MultiPoly g(F.model.n, {});
    for (int k = 0; k <= pf->phi.degree(); ++k) {
        if (pf->phi.coeff(k) == Complex(0.0)) continue;
        g = add(g, scale(linear_form_power(pf->l.w, k, degree_cap), pf->phi.coeff(k)));
    }
    return RadialMap{F.model, PolyField{std::move(g)}};
}

Vector support_direction(const SupportFunctional& l, const NormModel& model) {
    if (l.w.size() != model.n)
        throw std::invalid_argument("functional dimension does not match model dimension");
    const double wmax = l.w.cwiseAbs().maxCoeff();
    if (wmax == 0.0) throw std::invalid_argument("zero functional has no support direction");
    if (is_inf_exponent(model.p) || model.p == 1.0) {
        // the functional pairs with a single coordinate; pick the leading one
        for (Eigen::Index j = 0; j < l.w.size(); ++j) {
            if (std::abs(l.w[j]) >= wmax * (1.0 - 1e-12)) {
                Vector v = Vector::Zero(model.n);
                v[j] = std::conj(l.w[j]) / std::abs(l.w[j]);
                return v;
            }
        }
    }
    // Hoelder equality: v_j = conj(w_j) |w_j|^(q-2), normalized
    const double q = dual_exponent(model.p);
    Vector v = Vector::Zero(model.n);
    for (Eigen::Index j = 0; j < l.w.size(); ++j) {
        const double a = std::abs(l.w[j]);
        if (a > 0.0) v[j] = std::conj(l.w[j]) * std::pow(a, q - 2.0);
    }
    return v / norm(v, model);
}

Vector eval(const PolyMap& F, const Vector& x) {
    Vector y(Eigen::Index(F.components.size()));
    for (size_t i = 0; i < F.components.size(); ++i) y[Eigen::Index(i)] = eval(F.components[i], x);
    return y;
}

Eigen::MatrixXcd jacobian(const PolyMap& F, const Vector& x) {
    const auto rows = Eigen::Index(F.components.size());
    Eigen::MatrixXcd J(rows, x.size());
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < x.size(); ++j)
            J(i, j) = eval_partial(F.components[size_t(i)], int(j), x);
    return J;
}

PolyMap to_poly_map(const RadialMap& F, int degree_cap) {
    const RadialMap P = to_poly(F, degree_cap);
    const MultiPoly& f = as_poly(P)->f;
    const int n = P.model.n;
    PolyMap out;
    out.components.reserve(size_t(n));
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
        e[i] = 1;
        out.components.push_back(multiply(f, MultiPoly(n, {{e, Complex(1.0)}}), degree_cap));
    }
    return out;
}

}  // namespace radialmaps
