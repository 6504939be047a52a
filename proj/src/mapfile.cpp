#include "radialmaps/mapfile.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace radialmaps {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double_strict(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw std::invalid_argument("malformed number '" + s + "'");
    return v;
}

struct Token {
    std::string text;
    int col;  // 1-based within the line
};

std::vector<Token> split_tokens(const std::string& value, int base_col) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < value.size()) {
        while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i]))) ++i;
        if (i >= value.size()) break;
        const size_t start = i;
        while (i < value.size() && !std::isspace(static_cast<unsigned char>(value[i]))) ++i;
        out.push_back({value.substr(start, i - start), base_col + int(start)});
    }
    return out;
}

double dual_norm_of(const Vector& w, const NormModel& model) {
    const double q = dual_exponent(model.p);
    NormModel dual{q, model.n};
    return norm(w, dual);
}

struct Line {
    std::string key;
    std::string value;
    int number;     // 1-based line number
    int value_col;  // 1-based column where the value starts
};

}  // namespace

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(col_) +
                         ": " + msg),
      line(line_),
      col(col_) {}

std::string serialize_map(const RadialMap& F) {
    std::ostringstream os;
    os << "format = radialmaps-map/1\n";
    os << "p = " << (is_inf_exponent(F.model.p) ? std::string("inf") : fmt17(F.model.p)) << "\n";
    os << "n = " << F.model.n << "\n";
    if (const auto* pf = std::get_if<ProfileField>(&F.field)) {
        os << "kind = profile\n";
        os << "w =";
        for (Eigen::Index j = 0; j < pf->l.w.size(); ++j)
            os << " " << fmt17(pf->l.w[j].real()) << " " << fmt17(pf->l.w[j].imag());
        os << "\nphi =";
        for (int k = 0; k <= pf->phi.degree(); ++k)
            os << " " << fmt17(pf->phi.coeff(k).real()) << " " << fmt17(pf->phi.coeff(k).imag());
        os << "\n";
    } else {
        os << "kind = poly\n";
        for (const PolyTerm& t : std::get<PolyField>(F.field).f.terms()) {
            os << "term = " << fmt17(t.coefficient.real()) << " " << fmt17(t.coefficient.imag());
            for (Eigen::Index j = 0; j < t.exponents.size(); ++j) os << " " << t.exponents[j];
            os << "\n";
        }
    }
    return os.str();
}

RadialMap parse_map(const std::string& text) {
    std::vector<Line> lines;
    {
        std::istringstream is(text);
        std::string raw;
        int number = 0;
        while (std::getline(is, raw)) {
            ++number;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            size_t first = raw.find_first_not_of(" \t");
            if (first == std::string::npos || raw[first] == '#') continue;
            const size_t eq = raw.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected 'key = value'", number, int(first) + 1);
            std::string key = raw.substr(first, eq - first);
            while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
                key.pop_back();
            size_t vstart = eq + 1;
            while (vstart < raw.size() && std::isspace(static_cast<unsigned char>(raw[vstart])))
                ++vstart;
            lines.push_back({key, raw.substr(vstart), number, int(vstart) + 1});
        }
    }
    if (lines.empty()) throw ParseError("empty map description", 1, 1);
    if (lines[0].key != "format" || lines[0].value != "radialmaps-map/1")
        throw ParseError("first entry must be 'format = radialmaps-map/1'", lines[0].number, 1);

    std::map<std::string, Line> single;
    std::vector<Line> terms;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.key == "term") {
            terms.push_back(ln);
        } else if (ln.key == "kind" || ln.key == "p" || ln.key == "n" || ln.key == "w" ||
                   ln.key == "phi") {
            if (!single.emplace(ln.key, ln).second)
                throw ParseError("duplicate key '" + ln.key + "'", ln.number, 1);
        } else {
            throw ParseError("unknown key '" + ln.key + "'", ln.number, 1);
        }
    }
    auto need = [&](const char* key) -> const Line& {
        auto it = single.find(key);
        if (it == single.end())
            throw ParseError(std::string("missing key '") + key + "'", lines.back().number, 1);
        return it->second;
    };

    NormModel model;
    {
        const Line& lp = need("p");
        if (lp.value == "inf") {
            model.p = std::numeric_limits<double>::infinity();
        } else {
            try {
                model.p = parse_double_strict(lp.value);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), lp.number, lp.value_col);
            }
        }
        if (!(model.p >= 1.0)) throw ParseError("p must be at least 1", lp.number, lp.value_col);
        const Line& ln = need("n");
        try {
            const double nv = parse_double_strict(ln.value);
            model.n = int(nv);
            if (model.n < 1 || double(model.n) != nv)
                throw std::invalid_argument("n must be a positive integer");
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), ln.number, ln.value_col);
        }
    }

    auto parse_floats = [](const Line& ln) {
        std::vector<double> vals;
        for (const Token& t : split_tokens(ln.value, ln.value_col)) {
            try {
                vals.push_back(parse_double_strict(t.text));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), ln.number, t.col);
            }
        }
        return vals;
    };

    const Line& lk = need("kind");
    if (lk.value == "profile") {
        const Line& lw = need("w");
        const std::vector<double> wv = parse_floats(lw);
        if (wv.size() != size_t(2 * model.n))
            throw ParseError("functional needs " + std::to_string(2 * model.n) +
                                 " numbers (re/im pairs)",
                             lw.number, lw.value_col);
        Vector w(model.n);
        for (int j = 0; j < model.n; ++j) w[j] = Complex(wv[size_t(2 * j)], wv[size_t(2 * j + 1)]);
        if (dual_norm_of(w, model) > 1.0 + 1e-9)
            throw ParseError("functional dual norm exceeds 1", lw.number, lw.value_col);

        const Line& lphi = need("phi");
        const std::vector<double> pv = parse_floats(lphi);
        if (pv.empty() || pv.size() % 2 != 0)
            throw ParseError("profile needs a positive even number of values (re/im pairs)",
                             lphi.number, lphi.value_col);
        CoeffVector c(Eigen::Index(pv.size() / 2));
        for (Eigen::Index k = 0; k < c.size(); ++k)
            c[k] = Complex(pv[size_t(2 * k)], pv[size_t(2 * k + 1)]);
        return RadialMap{model, ProfileField{TruncatedSeries(std::move(c)),
                                             SupportFunctional{std::move(w)}}};
    }
    if (lk.value == "poly") {
        std::vector<PolyTerm> parsed;
        for (const Line& lt : terms) {
            const std::vector<double> tv = parse_floats(lt);
            if (tv.size() != size_t(2 + model.n))
                throw ParseError("term needs re, im and " + std::to_string(model.n) +
                                     " exponents",
                                 lt.number, lt.value_col);
            Eigen::VectorXi e(model.n);
            for (int j = 0; j < model.n; ++j) {
                const double ev = tv[size_t(2 + j)];
                if (ev < 0.0 || ev != double(int(ev)))
                    throw ParseError("exponents must be nonnegative integers", lt.number,
                                     lt.value_col);
                e[j] = int(ev);
            }
            parsed.push_back({std::move(e), Complex(tv[0], tv[1])});
        }
        return RadialMap{model, PolyField{MultiPoly(model.n, std::move(parsed))}};
    }
    throw ParseError("kind must be 'profile' or 'poly'", lk.number, lk.value_col);
}

Complex parse_complex_literal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    // split off a trailing +/- term, ignoring exponent signs
    size_t split = std::string::npos;
    for (size_t i = 1; i < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E')
            split = i;
    }
    auto parse_imag = [](std::string part) -> double {
        part.pop_back();  // the trailing 'i'
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_double_strict(part);
    };
    if (text.back() == 'i') {
        if (split == std::string::npos) return {0.0, parse_imag(text)};
        return {parse_double_strict(text.substr(0, split)), parse_imag(text.substr(split))};
    }
    if (split != std::string::npos)
        throw std::invalid_argument("malformed complex literal '" + text + "'");
    return {parse_double_strict(text), 0.0};
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

RadialMap parse_map_spec(const std::string& spec, const NormModel& model, int degree) {
    Vector e1 = Vector::Zero(model.n);
    e1[0] = 1.0;
    if (spec == "koebe") return koebe_map(model, e1, degree);
    if (spec == "identity") return profile_map(model, e1, TruncatedSeries::constant(1.0, 0));
    if (spec.rfind("profile:", 0) == 0) {
        const std::string body = spec.substr(8);
        const std::vector<std::string> parts = split_on(body, ',');
        CoeffVector c(Eigen::Index(parts.size()));
        for (size_t k = 0; k < parts.size(); ++k) {
            try {
                c[Eigen::Index(k)] = parse_complex_literal(parts[k]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("profile coefficient ") + std::to_string(k) + ": " +
                                     e.what(),
                                 1, int(spec.find(parts[k].empty() ? ":" : parts[k])) + 1);
            }
        }
        return profile_map(model, e1, TruncatedSeries(std::move(c)));
    }
    if (spec.rfind("poly:", 0) == 0) {
        std::vector<PolyTerm> terms;
        for (const std::string& term : split_on(spec.substr(5), ';')) {
            const std::vector<std::string> parts = split_on(term, ':');
            if (parts.size() != 2)
                throw ParseError("poly term must look like coeff:e1,...,en ('" + term + "')", 1,
                                 1);
            const std::vector<std::string> exps = split_on(parts[1], ',');
            if (exps.size() != size_t(model.n))
                throw ParseError("poly term needs " + std::to_string(model.n) + " exponents", 1,
                                 1);
            PolyTerm t;
            t.exponents.resize(model.n);
            try {
                t.coefficient = parse_complex_literal(parts[0]);
                for (int j = 0; j < model.n; ++j) {
                    const double ev = parse_double_strict(exps[size_t(j)]);
                    if (ev < 0.0 || ev != double(int(ev)))
                        throw std::invalid_argument("exponents must be nonnegative integers");
                    t.exponents[j] = int(ev);
                }
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("poly term '") + term + "': " + e.what(), 1, 1);
            }
            terms.push_back(std::move(t));
        }
        return poly_field_map(model, MultiPoly(model.n, std::move(terms)));
    }
    std::ifstream in(spec, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open map file '" + spec +
                                 "' (and it is not a builtin map name)");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_map(buf.str());
}

}  // namespace radialmaps
