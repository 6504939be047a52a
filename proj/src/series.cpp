#include "radialmaps/series.hpp"

#include <stdexcept>

namespace radialmaps {

namespace {

int check_degree(int degree) {
    if (degree < 0) throw std::invalid_argument("series degree must be nonnegative");
    return degree;
}

}  // namespace

TruncatedSeries::TruncatedSeries() : coeff_(CoeffVector::Zero(1)) {}

TruncatedSeries::TruncatedSeries(CoeffVector coeff) : coeff_(std::move(coeff)) {
    if (coeff_.size() == 0) throw std::invalid_argument("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::zero(int degree) {
    return TruncatedSeries(CoeffVector::Zero(check_degree(degree) + 1));
}

TruncatedSeries TruncatedSeries::constant(Complex c0, int degree) {
    CoeffVector c = CoeffVector::Zero(check_degree(degree) + 1);
    c[0] = c0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(int degree) {
    if (degree < 1) throw std::invalid_argument("identity series needs degree >= 1");
    CoeffVector c = CoeffVector::Zero(degree + 1);
    c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

Complex TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > degree()) throw std::out_of_range("series coefficient index out of range");
    return coeff_[k];
}

Complex& TruncatedSeries::at(int k) {
    if (k < 0 || k > degree()) throw std::out_of_range("series coefficient index out of range");
    return coeff_[k];
}

TruncatedSeries TruncatedSeries::truncated(int degree) const {
    check_degree(degree);
    CoeffVector c = CoeffVector::Zero(degree + 1);
    const int keep = std::min(degree, this->degree());
    c.head(keep + 1) = coeff_.head(keep + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int d = std::min(a.degree(), b.degree());
    return TruncatedSeries(a.coeff().head(d + 1) + b.coeff().head(d + 1));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int d = std::min(a.degree(), b.degree());
    return TruncatedSeries(a.coeff().head(d + 1) - b.coeff().head(d + 1));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int d = std::min(a.degree(), b.degree());
    CoeffVector c = CoeffVector::Zero(d + 1);
    for (int k = 0; k <= d; ++k) {
        Complex s = 0.0;
        for (int i = 0; i <= k; ++i) s += a.coeff()[i] * b.coeff()[k - i];
        c[k] = s;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeff()[0] == Complex(0.0, 0.0))
        throw std::domain_error("series division by a series vanishing at the origin");
    const int d = std::min(a.degree(), b.degree());
    CoeffVector q = CoeffVector::Zero(d + 1);
    for (int k = 0; k <= d; ++k) {
        Complex s = a.coeff()[k];
        for (int i = 0; i < k; ++i) s -= q[i] * b.coeff()[k - i];
        q[k] = s / b.coeff()[0];
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.degree() < 1) throw std::domain_error("derivative would drop below degree 0");
    CoeffVector c(a.degree());
    for (int k = 1; k <= a.degree(); ++k) c[k - 1] = static_cast<double>(k) * a.coeff()[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.coeff()[0] != Complex(0.0, 0.0))
        throw std::domain_error("composition requires the inner series to vanish at the origin");
    const int d = std::min(outer.degree(), inner.degree());
    const TruncatedSeries in = inner.truncated(d);
    // Horner on the outer coefficients; terms beyond degree d cannot reach c_d
    // because inner has no constant term.
    TruncatedSeries acc = TruncatedSeries::zero(d);
    for (int k = d; k >= 0; --k) {
        acc = mul(acc, in);
        acc.at(0) += outer.coeff()[k];
    }
    return acc;
}

TruncatedSeries scale_argument(const TruncatedSeries& a, Complex factor) {
    CoeffVector c(a.degree() + 1);
    Complex f = 1.0;
    for (int k = 0; k <= a.degree(); ++k) {
        c[k] = a.coeff()[k] * f;
        f *= factor;
    }
    return TruncatedSeries(std::move(c));
}

Complex eval(const TruncatedSeries& a, Complex z) {
    Complex acc = 0.0;
    for (int k = a.degree(); k >= 0; --k) acc = acc * z + a.coeff()[k];
    return acc;
}

}  // namespace radialmaps
