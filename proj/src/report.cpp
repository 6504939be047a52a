#include "radialmaps/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace radialmaps {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::string cell(const std::optional<bool>& v) {
    return v ? std::string(*v ? "true" : "false") : std::string();
}

std::string config_echo(const RunConfig& c) {
    std::ostringstream os;
    os << "p=" << format_exponent(c.model.p) << " n=" << c.model.n << " seed=" << c.seed
       << " samples=" << c.sample_count << " degree=" << c.degree
       << " margin=" << format_double(c.margin) << " bound_tol=" << format_double(c.bound_tol)
       << " root_tol=" << format_double(c.root_tol) << " s_max=" << c.s_max;
    return os.str();
}

nlohmann::ordered_json config_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["p"] = is_inf_exponent(c.model.p) ? nlohmann::ordered_json("inf")
                                        : nlohmann::ordered_json(c.model.p);
    j["n"] = c.model.n;
    j["seed"] = c.seed;
    j["samples"] = c.sample_count;
    j["degree"] = c.degree;
    j["margin"] = c.margin;
    j["bound_tol"] = c.bound_tol;
    j["root_tol"] = c.root_tol;
    j["s_max"] = c.s_max;
    return j;
}

nlohmann::ordered_json opt_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

}  // namespace

void RunConfig::validate() const {
    if (!(margin > 0.0) || !(bound_tol > 0.0) || !(root_tol > 0.0))
        throw std::invalid_argument("all tolerances must be positive");
    if (sample_count < model.n)
        throw std::invalid_argument("sample count must be at least the dimension");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    if (s_max < 1) throw std::invalid_argument("s_max must be positive");
    if (!(model.p >= 1.0)) throw std::invalid_argument("p must be at least 1");
    if (model.n < 1) throw std::invalid_argument("n must be positive");
}

int SuiteResult::passed() const {
    int k = 0;
    for (const Record& r : records) k += r.status == "pass";
    return k;
}

int SuiteResult::failed() const {
    int k = 0;
    for (const Record& r : records) k += r.status == "fail";
    return k;
}

int SuiteResult::skipped() const {
    int k = 0;
    for (const Record& r : records) k += r.status == "skip";
    return k;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(Complex z) {
    std::string out = format_double(z.real());
    out += (z.imag() < 0.0 || std::signbit(z.imag())) ? "-" : "+";
    out += format_double(std::abs(z.imag()));
    out += "i";
    return out;
}

std::string format_exponent(double p) {
    return is_inf_exponent(p) ? std::string("inf") : format_double(p);
}

Record record_from(const BoundReport& b) {
    Record rec;
    rec.name = b.name;
    rec.kind = "bound";
    rec.status = b.passed ? "pass" : "fail";
    rec.lhs = b.lhs;
    rec.rhs = b.rhs;
    rec.slack = b.slack;
    rec.attained = b.attained;
    if (std::isfinite(b.witness_r)) rec.witness = "r=" + format_double(b.witness_r);
    if (b.witness_direction.size() > 0) {
        rec.witness += rec.witness.empty() ? "u=[" : " u=[";
        for (Eigen::Index j = 0; j < b.witness_direction.size(); ++j) {
            if (j) rec.witness += "; ";
            rec.witness += format_complex(b.witness_direction[j]);
        }
        rec.witness += "]";
    }
    rec.detail = b.note;
    return rec;
}

Record record_from(const std::string& name, const CriterionReport& c) {
    Record rec;
    rec.name = name;
    rec.kind = "criterion";
    switch (c.verdict) {
        case Verdict::holds: rec.status = "pass"; break;
        case Verdict::fails: rec.status = "fail"; break;
        case Verdict::inconclusive: rec.status = "skip"; break;
    }
    rec.verdict = to_string(c.verdict);
    rec.margin = c.margin_observed;
    if (std::abs(c.witness_zeta) > 0.0)
        rec.witness = "zeta=" + format_complex(c.witness_zeta);
    if (c.witness_direction.size() > 0) {
        rec.witness += rec.witness.empty() ? "u=[" : " u=[";
        for (Eigen::Index j = 0; j < c.witness_direction.size(); ++j) {
            if (j) rec.witness += "; ";
            rec.witness += format_complex(c.witness_direction[j]);
        }
        rec.witness += "]";
    }
    rec.detail = c.note;
    return rec;
}

std::string to_csv(const SuiteResult& result) {
    std::ostringstream os;
    os << "# schema_version = 1\n";
    os << "# suite = " << result.suite << "\n";
    os << "# config = " << config_echo(result.config) << "\n";
    os << "name,kind,status,lhs,rhs,slack,margin,attained,verdict,witness,detail\n";
    for (const Record& r : result.records) {
        os << csv_escape(r.name) << ',' << r.kind << ',' << r.status << ',' << cell(r.lhs) << ','
           << cell(r.rhs) << ',' << cell(r.slack) << ',' << cell(r.margin) << ','
           << cell(r.attained) << ',' << r.verdict << ',' << csv_escape(r.witness) << ','
           << csv_escape(r.detail) << "\n";
    }
    os << "# summary = pass=" << result.passed() << " fail=" << result.failed()
       << " skip=" << result.skipped() << "\n";
    return os.str();
}

std::string to_json(const SuiteResult& result) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["suite"] = result.suite;
    j["config"] = config_json(result.config);
    j["records"] = nlohmann::ordered_json::array();
    for (const Record& r : result.records) {
        nlohmann::ordered_json rj;
        rj["name"] = r.name;
        rj["kind"] = r.kind;
        rj["status"] = r.status;
        rj["lhs"] = opt_json(r.lhs);
        rj["rhs"] = opt_json(r.rhs);
        rj["slack"] = opt_json(r.slack);
        rj["margin"] = opt_json(r.margin);
        rj["attained"] = r.attained ? nlohmann::ordered_json(*r.attained)
                                    : nlohmann::ordered_json(nullptr);
        rj["verdict"] = r.verdict;
        rj["witness"] = r.witness;
        rj["detail"] = r.detail;
        j["records"].push_back(std::move(rj));
    }
    j["wall_seconds"] = result.wall_seconds;
    j["summary"] = {{"pass", result.passed()}, {"fail", result.failed()},
                    {"skip", result.skipped()}};
    return j.dump(2) + "\n";
}

std::string radii_csv(const std::vector<RadiiRow>& rows) {
    std::ostringstream os;
    os << "# schema_version = 1\n";
    os << "variant,m,N,r,residual,iterations\n";
    for (const RadiiRow& row : rows)
        os << row.variant << ',' << row.m << ',' << row.N << ',' << format_double(row.r) << ','
           << format_double(row.residual) << ',' << row.iterations << "\n";
    return os.str();
}

std::string radii_json(const std::vector<RadiiRow>& rows) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["rows"] = nlohmann::ordered_json::array();
    for (const RadiiRow& row : rows) {
        nlohmann::ordered_json rj;
        rj["variant"] = row.variant;
        rj["m"] = row.m;
        rj["N"] = row.N;
        rj["r"] = row.r;
        rj["residual"] = row.residual;
        rj["iterations"] = row.iterations;
        j["rows"].push_back(std::move(rj));
    }
    return j.dump(2) + "\n";
}

}  // namespace radialmaps
