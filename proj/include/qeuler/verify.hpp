#pragma once

// Identity verification suites: each runs an invariant grid, comparing a
// closed form against an independent route, and summarizes the outcome as a
// VerificationReport.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeuler/exactnum.hpp"

namespace qeuler::verify {

struct Failure {
    nlohmann::json inputs;
    std::string lhs;
    std::string rhs;
    std::string deviation;
};

struct VerificationReport {
    std::string suite;
    nlohmann::json grid;
    std::size_t cases_run = 0;
    std::vector<Failure> failures;
    bool exact = true;
    std::string max_deviation = "exact"; // "exact", a rational, or a decimal
    std::int64_t elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

/// Grid overrides; unset fields use each suite's default grid.
struct SuiteOptions {
    std::optional<unsigned> max_m;
    std::optional<unsigned> max_n;
    std::optional<unsigned> max_x;
    std::optional<unsigned long> max_k;
    std::vector<Rational> qs;
    std::vector<unsigned long> fs;
    std::vector<unsigned long> moduli;
    int digits = kDefaultDigits;
};

// Upper bounds accepted for SuiteOptions; larger requests are DomainErrors.
inline constexpr unsigned kMaxDegree = 64;
inline constexpr unsigned kMaxX = 64;
inline constexpr unsigned long kMaxTerms = 1000;
inline constexpr unsigned long kMaxF = 99;
inline constexpr int kMaxDigits = 1000;

/// thm2 thm3 thm4 weighted classical limit zeta partial-zeta lfunction characters
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all", which concatenates every suite into one report).
/// Throws DomainError for an unknown suite or an invalid grid.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options = {});

/// Runs the suites one by one.
std::vector<VerificationReport> run_suites(std::string_view name, const SuiteOptions& options = {});

} // namespace qeuler::verify
