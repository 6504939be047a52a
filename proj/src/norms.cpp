#include "radialmaps/norms.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace radialmaps {

namespace {

void check_model(const NormModel& model) {
    if (!(model.p >= 1.0))  // NaN also lands here
        throw std::invalid_argument("norm exponent must satisfy p >= 1");
    if (model.n < 1) throw std::invalid_argument("dimension must be positive");
}

void check_dim(const Vector& x, const NormModel& model) {
    if (x.size() != model.n) throw std::invalid_argument("vector dimension does not match the model");
}

}  // namespace

bool is_inf_exponent(double p) { return std::isinf(p); }

double dual_exponent(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("norm exponent must satisfy p >= 1");
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    if (is_inf_exponent(p)) return 1.0;
    return p / (p - 1.0);
}

double norm(const Vector& x, const NormModel& model) {
    check_model(model);
    check_dim(x, model);
    if (is_inf_exponent(model.p)) return x.cwiseAbs().maxCoeff();
    if (model.p == 1.0) return x.cwiseAbs().sum();
    if (model.p == 2.0) return x.norm();
    double s = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) s += std::pow(std::abs(x[j]), model.p);
    return std::pow(s, 1.0 / model.p);
}

Complex SupportFunctional::operator()(const Vector& y) const {
    if (y.size() != w.size()) throw std::invalid_argument("vector dimension does not match the functional");
    Complex s = 0.0;
    for (Eigen::Index j = 0; j < w.size(); ++j) s += w[j] * y[j];
    return s;
}

SupportFunctional support_functional(const Vector& x, const NormModel& model,
                                     std::optional<Eigen::Index> inf_index) {
    check_model(model);
    check_dim(x, model);
    const double nx = norm(x, model);
    if (nx == 0.0) throw std::domain_error("support functional is undefined at the origin");

    Vector w = Vector::Zero(x.size());
    if (is_inf_exponent(model.p)) {
        Eigen::Index idx = 0;
        double best = -1.0;
        for (Eigen::Index j = 0; j < x.size(); ++j) {
            const double a = std::abs(x[j]);
            if (a > best) { best = a; idx = j; }
        }
        if (inf_index) {
            const Eigen::Index j = *inf_index;
            if (j < 0 || j >= x.size()) throw std::invalid_argument("inf_index out of range");
            if (std::abs(std::abs(x[j]) - best) > 1e-12 * best)
                throw std::invalid_argument("inf_index does not attain the max modulus");
            idx = j;
        }
        w[idx] = std::conj(x[idx]) / std::abs(x[idx]);
    } else if (model.p == 1.0) {
        for (Eigen::Index j = 0; j < x.size(); ++j) {
            const double a = std::abs(x[j]);
            if (a > 0.0) w[j] = std::conj(x[j]) / a;
        }
    } else {
        const double scale = std::pow(nx, 1.0 - model.p);
        for (Eigen::Index j = 0; j < x.size(); ++j) {
            const double a = std::abs(x[j]);
            if (a > 0.0) w[j] = scale * std::pow(a, model.p - 2.0) * std::conj(x[j]);
        }
    }
    return SupportFunctional{std::move(w)};
}

std::vector<Vector> sphere_sample(const NormModel& model, int count, std::uint64_t seed) {
    check_model(model);
    if (count < 0) throw std::invalid_argument("sample count must be nonnegative");
    std::vector<Vector> out;
    out.reserve(count);
    for (int i = 0; i < count && i < model.n; ++i) {
        Vector e = Vector::Zero(model.n);
        e[i] = 1.0;
        out.push_back(std::move(e));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(out.size()) < count) {
        Vector x(model.n);
        for (int j = 0; j < model.n; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            x[j] = Complex(re, im);
        }
        const double nx = norm(x, model);
        if (nx < 1e-8) continue;  // essentially impossible; redraw keeps the contract exact
        out.push_back(x / nx);
    }
    return out;
}

}  // namespace radialmaps
