#pragma once

#include <complex>

#include <Eigen/Core>

namespace radialmaps {

using Complex = std::complex<double>;
using CoeffVector = Eigen::VectorXcd;

/// Truncated complex power series c0 + c1*z + ... + cd*z^d.
/// Binary operations truncate to the smaller operand degree; truncation is the
/// only approximation this layer introduces, so callers pick the degree.
class TruncatedSeries {
public:
    static constexpr int kDefaultDegree = 32;

    TruncatedSeries();
    explicit TruncatedSeries(CoeffVector coeff);

    static TruncatedSeries zero(int degree);
    static TruncatedSeries constant(Complex c0, int degree);
    /// The series z, at the given truncation degree (>= 1).
    static TruncatedSeries identity(int degree);

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    const CoeffVector& coeff() const { return coeff_; }
    Complex coeff(int k) const;
    Complex& at(int k);

    /// Re-truncate: shrink, or zero-pad up to the requested degree.
    TruncatedSeries truncated(int degree) const;

private:
    CoeffVector coeff_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
/// Cauchy product, truncated to min(deg a, deg b).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Cauchy quotient; requires b(0) != 0.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);
/// Termwise k*c_k; degree drops by one. Degree-0 input is an error.
TruncatedSeries derivative(const TruncatedSeries& a);
/// outer(inner(z)) truncated to min(deg outer, deg inner); inner(0) must be 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);
/// z -> factor*z, i.e. c_k -> c_k * factor^k.
TruncatedSeries scale_argument(const TruncatedSeries& a, Complex factor);

/// Horner evaluation of the truncated polynomial at z.
Complex eval(const TruncatedSeries& a, Complex z);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return div(a, b); }

}  // namespace radialmaps
