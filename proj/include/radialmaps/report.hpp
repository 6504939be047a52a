#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radialmaps/bounds.hpp"
#include "radialmaps/criteria.hpp"
#include "radialmaps/norms.hpp"

namespace radialmaps {

/// Shared knobs for every command; tolerances must be positive and the sample
/// count at least the dimension.
struct RunConfig {
    NormModel model;
    std::uint64_t seed = 20260815;
    int sample_count = 64;
    int degree = 32;
    double margin = 1e-9;
    double bound_tol = 1e-9;
    double root_tol = 1e-12;
    int s_max = 8;
    std::string format = "csv";  // csv | json
    std::string out_path;        // empty = stdout

    void validate() const;
};

/// One row of a suite: a bound, a criterion verdict, a solved radius, or a
/// plain data point. status is pass/fail/skip; only "fail" drives the exit
/// status. Absent numeric fields stay disengaged and serialize as blanks.
struct Record {
    std::string name;
    std::string kind;    // bound | criterion | radius | data
    std::string status;  // pass | fail | skip
    std::optional<double> lhs;
    std::optional<double> rhs;
    std::optional<double> slack;
    std::optional<double> margin;
    std::optional<bool> attained;
    std::string verdict;  // holds | fails | inconclusive | empty
    std::string witness;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    RunConfig config;
    std::vector<Record> records;
    double wall_seconds = 0.0;

    int passed() const;
    int failed() const;
    int skipped() const;
};

struct RadiiRow {
    std::string variant;
    std::string m;  // "inf" for the limit variant
    int N = 1;
    double r = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// 17-significant-digit float formatting used by every text emitter, so a
/// fixed config reproduces byte-identical CSV.
std::string format_double(double v);
std::string format_complex(Complex z);
std::string format_exponent(double p);  // "inf" or the 17-digit form

Record record_from(const BoundReport& b);
Record record_from(const std::string& name, const CriterionReport& c);

std::string to_csv(const SuiteResult& result);
std::string to_json(const SuiteResult& result);
std::string radii_csv(const std::vector<RadiiRow>& rows);
std::string radii_json(const std::vector<RadiiRow>& rows);

}  // namespace radialmaps
