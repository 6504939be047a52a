#include "radialmaps/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radialmaps/bohr.hpp"
#include "radialmaps/bounds.hpp"
#include "radialmaps/criteria.hpp"
#include "radialmaps/mapfile.hpp"
#include "radialmaps/report.hpp"

namespace radialmaps {

namespace {

std::string fmt_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

double parse_exponent(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    char* end = nullptr;
    const double p = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !(p >= 1.0))
        throw std::invalid_argument("--p needs a number >= 1 or 'inf', got '" + s + "'");
    return p;
}

std::pair<int, int> parse_range(const std::string& s) {
    const size_t pos = s.find("..");
    int a = 0, b = 0;
    try {
        if (pos == std::string::npos) {
            a = b = std::stoi(s);
        } else {
            a = std::stoi(s.substr(0, pos));
            b = std::stoi(s.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + s + "' (expected A or A..B)");
    }
    if (a < 1 || b < a)
        throw std::invalid_argument("bad range '" + s + "' (need 1 <= A <= B)");
    return {a, b};
}

void emit_text(const std::string& out_path, const std::string& text, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("error while writing output file '" + out_path + "'");
}

/// The map's distinguished direction: the profile functional's norming vector,
/// or the first basis vector for polynomial fields.
Vector distinguished_direction(const RadialMap& F) {
    if (const auto* pf = std::get_if<ProfileField>(&F.field))
        return support_direction(pf->l, F.model);
    Vector e1 = Vector::Zero(F.model.n);
    e1[0] = 1.0;
    return e1;
}

std::vector<Vector> make_samples(const RadialMap& F, const RunConfig& cfg) {
    std::vector<Vector> s = sphere_sample(F.model, cfg.sample_count, cfg.seed);
    if (std::holds_alternative<ProfileField>(F.field)) {
        const Vector v = distinguished_direction(F);
        s.push_back(v);
        s.push_back(-v);
    }
    return s;
}

Record skip_record(const std::string& name, const std::string& kind, const std::string& why) {
    Record rec;
    rec.name = name;
    rec.kind = kind;
    rec.status = "skip";
    rec.detail = why;
    return rec;
}

CriterionConfig criterion_config(const RunConfig& cfg) {
    CriterionConfig crit;
    crit.margin = cfg.margin;
    crit.degree = cfg.degree;
    return crit;
}

void suite_bieberbach(const RadialMap& F, const std::vector<Vector>& S, const RunConfig& cfg,
                      std::vector<Record>& out) {
    for (const BoundReport& b : check_bieberbach(F, F, cfg.s_max, S, cfg.bound_tol))
        out.push_back(record_from(b));
}

// Suite radii sit where the default truncation degree keeps the series tail
// far below the tolerances; wider radii need a higher --degree.
void suite_growth(const RadialMap& F, const std::vector<Vector>& S, const RunConfig& cfg,
                  std::vector<Record>& out) {
    for (const BoundReport& b : check_growth(F, S, {0.1, 0.2, 0.4}, cfg.bound_tol))
        out.push_back(record_from(b));
}

void suite_covering(const RadialMap& F, const std::vector<Vector>& S, const RunConfig& cfg,
                    std::vector<Record>& out) {
    for (double r : {0.2, 0.4})
        out.push_back(record_from(covering_margin(F, r, S, 720, cfg.bound_tol)));
}

void suite_distortion(const RadialMap& F, const std::vector<Vector>& S, const RunConfig& cfg,
                      std::vector<Record>& out) {
    const std::vector<double> radii{0.1, 0.2, 0.4};
    for (const BoundReport& b : check_distortion_ray(F, S, radii, cfg.bound_tol))
        out.push_back(record_from(b));
    if (!is_inf_exponent(F.model.p) && F.model.p == 2.0) {
        for (const BoundReport& b : check_distortion_hilbert(F, S, radii, cfg.bound_tol))
            out.push_back(record_from(b));
    } else {
        out.push_back(skip_record("operator-norm distortion", "bound",
                                  "needs the Euclidean model (p = 2)"));
    }
}

void suite_fekete(const RadialMap& F, const std::vector<Vector>& S, const RunConfig& cfg,
                  std::vector<Record>& out) {
    (void)S;
    const Vector u = distinguished_direction(F);
    for (double lambda : {0.0, 0.25, 0.5, 0.75}) {
        try {
            out.push_back(record_from(fekete_szego(F, u, lambda, cfg.bound_tol)));
        } catch (const std::logic_error& e) {
            out.push_back(skip_record("second coefficient functional", "bound", e.what()));
        }
    }
}

void suite_bloch(const RadialMap& F, const std::vector<Vector>& S, const RunConfig& cfg,
                 std::vector<Record>& out) {
    Record sem;
    sem.name = "bloch seminorm";
    sem.kind = "data";
    sem.status = "pass";
    sem.lhs = bloch_seminorm(F, S, 64, 72);
    sem.detail = "grid estimate, radial_grid=64 angle_grid=72";
    out.push_back(sem);
    try {
        out.push_back(record_from(check_bonk(F, S, 24, 72, cfg.bound_tol)));
    } catch (const std::logic_error& e) {
        out.push_back(skip_record("radial lower distortion", "bound", e.what()));
    }
    try {
        out.push_back(record_from(bloch_schlicht_check(F, S, criterion_config(cfg),
                                                       cfg.bound_tol)));
    } catch (const std::logic_error& e) {
        out.push_back(skip_record("schlicht ball", "bound", e.what()));
    }
}

void suite_bohr(const RadialMap& F, const std::vector<Vector>& S, const RunConfig& cfg,
                std::vector<Record>& out) {
    for (int m : {1, 2}) {
        for (int N : {1, 2, 3}) {
            const RadiusQuery q{RadiusVariant::general, m, N};
            const RadiusResult R = solve_radius(q);
            Record rad;
            rad.name = "subordination radius m=" + std::to_string(m) +
                       " N=" + std::to_string(N);
            rad.kind = "radius";
            rad.lhs = R.r;
            rad.margin = R.residual;
            rad.status = std::abs(R.residual) <= cfg.root_tol ? "pass" : "fail";
            rad.detail = "iterations=" + std::to_string(R.iterations);
            out.push_back(rad);
            const std::string name =
                "subordination radius inequality m=" + std::to_string(m) +
                " N=" + std::to_string(N);
            try {
                out.push_back(record_from(rogosinski_check(F, m, N, R.r, S, cfg.bound_tol)));
            } catch (const std::logic_error& e) {
                out.push_back(skip_record(name, "bound", e.what()));
            }
        }
    }
}

void suite_alexander(const RadialMap& F, const std::vector<Vector>& S, const RunConfig& cfg,
                     std::vector<Record>& out) {
    const CriterionConfig crit = criterion_config(cfg);
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const std::string name = "alexander agreement r=" + fmt_short(r);
        try {
            const AlexanderReport a = alexander_check(F, r, S, crit);
            Record rec;
            rec.name = name;
            rec.kind = "criterion";
            rec.status = !a.comparable ? "skip" : (a.agree ? "pass" : "fail");
            rec.verdict = a.comparable ? (a.agree ? "holds" : "fails") : "inconclusive";
            rec.margin = std::min(a.quasiconvex.margin_observed,
                                  a.transform_starlike.margin_observed);
            rec.detail = std::string("quasiconvex=") + to_string(a.quasiconvex.verdict) +
                         " transform_starlike=" + to_string(a.transform_starlike.verdict);
            out.push_back(rec);
        } catch (const std::logic_error& e) {
            out.push_back(skip_record(name, "criterion", e.what()));
        }
    }
}

SuiteResult run_suite(const std::string& suite, const RadialMap& F, const RunConfig& cfg) {
    static const std::vector<std::string> kAll{"bieberbach", "growth",  "covering",
                                               "distortion", "fekete",  "bloch",
                                               "bohr",       "alexander"};
    std::vector<std::string> chosen;
    if (suite == "all") {
        chosen = kAll;
    } else if (std::find(kAll.begin(), kAll.end(), suite) != kAll.end()) {
        chosen = {suite};
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }

    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult result;
    result.suite = suite;
    result.config = cfg;
    const std::vector<Vector> S = make_samples(F, cfg);
    for (const std::string& s : chosen) {
        if (s == "bieberbach") suite_bieberbach(F, S, cfg, result.records);
        else if (s == "growth") suite_growth(F, S, cfg, result.records);
        else if (s == "covering") suite_covering(F, S, cfg, result.records);
        else if (s == "distortion") suite_distortion(F, S, cfg, result.records);
        else if (s == "fekete") suite_fekete(F, S, cfg, result.records);
        else if (s == "bloch") suite_bloch(F, S, cfg, result.records);
        else if (s == "bohr") suite_bohr(F, S, cfg, result.records);
        else suite_alexander(F, S, cfg, result.records);
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

int do_radii(const std::string& variant, std::string m_range, const std::string& N_range,
             const RunConfig& cfg, std::ostream& out) {
    if (m_range.empty()) m_range = variant == "fixed_v" ? "1..1" : "1..6";
    const auto [m_lo, m_hi] = parse_range(m_range);
    const auto [N_lo, N_hi] = parse_range(N_range);
    if (variant == "fixed_v" && (m_lo != 1 || m_hi != 1))
        throw std::invalid_argument("the fixed_v variant is defined for m = 1 only");

    std::vector<RadiiRow> rows;
    auto push = [&](RadiusVariant v, const std::string& m_label, int m, int N) {
        const RadiusResult R = solve_radius(RadiusQuery{v, m, N});
        rows.push_back({variant, m_label, N, R.r, R.residual, R.iterations});
    };
    for (int N = N_lo; N <= N_hi; ++N) {
        if (variant == "limit") {
            push(RadiusVariant::limit, "inf", 1, N);
        } else if (variant == "fixed_v") {
            push(RadiusVariant::fixed_V, "1", 1, N);
        } else {
            for (int m = m_lo; m <= m_hi; ++m)
                push(RadiusVariant::general, std::to_string(m), m, N);
        }
    }
    emit_text(cfg.out_path, cfg.format == "json" ? radii_json(rows) : radii_csv(rows), out);
    return 0;
}

int do_verify(const std::string& suite, const std::string& map_spec, RunConfig cfg,
              std::ostream& out) {
    RadialMap F = parse_map_spec(map_spec, cfg.model, cfg.degree);
    cfg.model = F.model;  // a map file's own model wins over --p/--n
    cfg.validate();
    const SuiteResult result = run_suite(suite, F, cfg);
    emit_text(cfg.out_path, cfg.format == "json" ? to_json(result) : to_csv(result), out);
    return result.failed() > 0 ? 1 : 0;
}

Vector parse_direction(const std::string& u_spec, const NormModel& model) {
    Vector u = Vector::Zero(model.n);
    if (u_spec.size() >= 2 && u_spec[0] == 'e') {
        const int k = std::atoi(u_spec.c_str() + 1);
        if (k < 1 || k > model.n)
            throw std::invalid_argument("direction '" + u_spec + "' is out of range for n=" +
                                        std::to_string(model.n));
        u[k - 1] = 1.0;
        return u;
    }
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = u_spec.find(',', start);
        parts.push_back(u_spec.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (parts.size() != size_t(model.n))
        throw std::invalid_argument("direction needs " + std::to_string(model.n) +
                                    " comma-separated components");
    for (int j = 0; j < model.n; ++j) u[j] = parse_complex_literal(parts[size_t(j)]);
    const double nu = norm(u, model);
    if (nu < 1e-12) throw std::invalid_argument("direction must be nonzero");
    return u / nu;
}

int do_slice(const std::string& map_spec, const std::string& u_spec, RunConfig cfg,
             std::ostream& out) {
    RadialMap F = parse_map_spec(map_spec, cfg.model, cfg.degree);
    cfg.model = F.model;
    cfg.validate();
    const Vector u = parse_direction(u_spec, cfg.model);
    const TruncatedSeries h = slice_series(F, u, cfg.degree);
    const TruncatedSeries hp = derivative(h);
    const CriterionConfig crit = criterion_config(cfg);

    struct Row {
        double r;
        CriterionReport uni, star, conv;
    };
    std::vector<Row> table;
    for (int i = 1; i <= 19; ++i) {
        const double r = i / 20.0;
        table.push_back({r, univalent_disc(h, r, crit), starlike_disc(h, r, crit),
                         convex_disc(h, r, crit)});
    }

    std::ostringstream os;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["u"] = nlohmann::ordered_json::array();
        for (Eigen::Index k = 0; k < u.size(); ++k) j["u"].push_back(format_complex(u[k]));
        j["slice_coefficients"] = nlohmann::ordered_json::array();
        for (int k = 0; k <= h.degree(); ++k)
            j["slice_coefficients"].push_back(format_complex(h.coeff(k)));
        j["derivative_coefficients"] = nlohmann::ordered_json::array();
        for (int k = 0; k <= hp.degree(); ++k)
            j["derivative_coefficients"].push_back(format_complex(hp.coeff(k)));
        j["rows"] = nlohmann::ordered_json::array();
        for (const Row& row : table) {
            nlohmann::ordered_json rj;
            rj["r"] = row.r;
            rj["univalent_margin"] = row.uni.margin_observed;
            rj["univalent_verdict"] = to_string(row.uni.verdict);
            rj["starlike_margin"] = row.star.margin_observed;
            rj["starlike_verdict"] = to_string(row.star.verdict);
            rj["convex_margin"] = row.conv.margin_observed;
            rj["convex_verdict"] = to_string(row.conv.verdict);
            j["rows"].push_back(std::move(rj));
        }
        os << j.dump(2) << "\n";
    } else {
        os << "# schema_version = 1\n";
        os << "# u =";
        for (Eigen::Index k = 0; k < u.size(); ++k) os << " " << format_complex(u[k]);
        os << "\n# slice_coefficients =";
        for (int k = 0; k <= h.degree(); ++k) os << " " << format_complex(h.coeff(k));
        os << "\n# derivative_coefficients =";
        for (int k = 0; k <= hp.degree(); ++k) os << " " << format_complex(hp.coeff(k));
        os << "\nr,univalent_margin,univalent_verdict,starlike_margin,starlike_verdict,"
              "convex_margin,convex_verdict\n";
        for (const Row& row : table)
            os << format_double(row.r) << ',' << format_double(row.uni.margin_observed) << ','
               << to_string(row.uni.verdict) << ',' << format_double(row.star.margin_observed)
               << ',' << to_string(row.star.verdict) << ','
               << format_double(row.conv.margin_observed) << ',' << to_string(row.conv.verdict)
               << "\n";
    }
    emit_text(cfg.out_path, os.str(), out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks for radial holomorphic maps on l^p balls"};
    app.require_subcommand(1);

    std::string p_str = "2";
    RunConfig cfg;
    double tol = 1e-9;
    app.add_option("--p", p_str, "norm exponent (>= 1, or 'inf')")->capture_default_str();
    app.add_option("--n", cfg.model.n, "dimension")->capture_default_str();
    app.add_option("--seed", cfg.seed, "sampling seed (env RADIALMAPS_SEED overrides)")
        ->capture_default_str();
    app.add_option("--samples", cfg.sample_count, "sphere sample count")->capture_default_str();
    app.add_option("--degree", cfg.degree, "series truncation degree")->capture_default_str();
    app.add_option("--tol", tol, "bound and margin tolerance")->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "output path (default stdout)");

    auto* radii_cmd = app.add_subcommand("radii", "tabulate subordination radii");
    radii_cmd->fallthrough();
    std::string variant = "general", m_range, N_range = "1..6";
    radii_cmd->add_option("--variant", variant, "radius equation variant")
        ->check(CLI::IsMember({"general", "fixed_v", "limit"}))
        ->capture_default_str();
    radii_cmd->add_option("--m", m_range, "subordination order range A..B");
    radii_cmd->add_option("--N", N_range, "tail cutoff range A..B")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite over a map");
    verify_cmd->fallthrough();
    std::string suite = "all", map_spec = "koebe";
    verify_cmd->add_option("--suite", suite,
                           "bieberbach|growth|covering|distortion|fekete|bloch|bohr|"
                           "alexander|all")
        ->capture_default_str();
    verify_cmd->add_option("--map", map_spec, "builtin name or map file path")
        ->capture_default_str();

    auto* slice_cmd = app.add_subcommand("slice", "dump slice coefficients and margins");
    slice_cmd->fallthrough();
    std::string slice_map = "koebe", u_spec = "e1";
    slice_cmd->add_option("--map", slice_map, "builtin name or map file path")
        ->capture_default_str();
    slice_cmd->add_option("--u", u_spec, "direction: e<k> or comma-separated components")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("radialmaps");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (const char* env = std::getenv("RADIALMAPS_SEED")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end == env || *end != '\0')
                throw std::invalid_argument("RADIALMAPS_SEED must be an unsigned integer");
            cfg.seed = v;
        }
        cfg.model.p = parse_exponent(p_str);
        cfg.margin = tol;
        cfg.bound_tol = tol;
        cfg.validate();
        if (radii_cmd->parsed()) return do_radii(variant, m_range, N_range, cfg, out);
        if (verify_cmd->parsed()) return do_verify(suite, map_spec, cfg, out);
        return do_slice(slice_map, u_spec, cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace radialmaps
