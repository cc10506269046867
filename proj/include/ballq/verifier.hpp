#pragma once

/**
 * @file verifier.hpp
 * @brief Named checks replaying each numerical step of the very-ampleness
 *        argument, and the report built from them.
 *
 * The list of checks is data: an embedded JSON manifest gives each check its
 * scope, anchor, expected value and axioms. The code side is a table of
 * evaluators keyed by check id. Values on both sides are canonical strings
 * built from exact rationals, so comparison is exact string equality.
 */

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ballq::verify {

enum class Provenance { Paper, Trivial, Derived };
enum class Status { Match, Mismatch, Flagged };

std::string to_string(Provenance p);
std::string to_string(Status s);

struct Anchor {
    std::string location;
    std::string quote;
};

struct CheckResult {
    std::string check_id;
    std::string scope;
    Anchor paper_anchor;
    std::string expected;
    Provenance provenance = Provenance::Derived;
    std::string computed;
    Status status = Status::Mismatch;
    std::vector<std::string> axioms_used;  // citation strings
    std::vector<std::string> trace;
};

/// Scopes accepted by run_report, "all" first.
const std::vector<std::string>& scopes();

/// Axiom key -> citation. These are the only hypotheses a check may cite.
const std::map<std::string, std::string>& axiom_catalogue();

struct ManifestEntry {
    std::string id;
    std::string scope;
    Anchor anchor;
    std::string expected;
    Provenance provenance = Provenance::Derived;
    std::vector<std::string> axioms;  // keys into axiom_catalogue()
    bool disputed = false;
};

/// Parses a manifest; throws std::invalid_argument on schema errors.
std::vector<ManifestEntry> parse_manifest(std::string_view json_text);

/// The embedded manifest, validated against the evaluator table.
const std::vector<ManifestEntry>& manifest();

std::vector<std::string> check_ids();

class UnknownCheck : public std::invalid_argument {
public:
    explicit UnknownCheck(const std::string& id);
};

class UnknownScope : public std::invalid_argument {
public:
    explicit UnknownScope(const std::string& scope);
};

/// Runs one check. Accepts aliases (appII.57). Throws UnknownCheck.
CheckResult run_check(const std::string& id);

/// Runs every check in scope, ordered by id. Throws UnknownScope.
std::vector<CheckResult> run_report(const std::string& scope = "all");

struct ReportSummary {
    std::size_t matched = 0;
    std::size_t mismatched = 0;
    std::size_t flagged = 0;
};

ReportSummary summarize(const std::vector<CheckResult>& results);

/// 0 when no MISMATCH; 1 otherwise, or when FLAGGED and fail_on_flagged.
int exit_status(const std::vector<CheckResult>& results, bool fail_on_flagged);

std::string render_text(const std::vector<CheckResult>& results);
std::string render_json(const std::vector<CheckResult>& results, int indent = 2);

/// Inputs, formula, intermediate values and conclusion of one check.
std::string explain(const std::string& id);

}  // namespace ballq::verify
