#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equiflow/decision.hpp"
#include "equiflow/displacement.hpp"
#include "equiflow/group.hpp"
#include "equiflow/invariants.hpp"
#include "equiflow/io.hpp"
#include "equiflow/matching.hpp"
#include "equiflow/stratify.hpp"

namespace equiflow {

inline constexpr const char* kVersion = "0.1.0";

enum class Command {
    Validate,
    Subdivide,
    Stratify,
    Euler,
    DecidePathField,
    DecideCipd,
    ConstructMatching,
    ConstructDisplacement,
    VerifyDisplacement,
    Catalog,
};

enum class OutputFormat { Json, Table, Both };

std::string command_name(Command c);

struct RunConfig {
    Command command = Command::Validate;
    /// File path or catalog:<name>; for Command::Catalog the bare catalog name
    /// (empty lists the catalog).
    std::string input;
    std::optional<std::string> fixed_set;
    std::optional<std::string> map_file;
    int times = 1;
    int max_group_order = kDefaultMaxGroupOrder;
    bool cancel = false;
    OutputFormat format = OutputFormat::Both;
};

/// One pipeline stage's machine-readable result plus its table rendering.
struct Stage {
    std::string name;
    json data;
    std::string table;
};

struct Report {
    std::string command;
    std::string input;
    std::string input_digest;
    std::vector<Stage> stages;
    std::vector<std::string> warnings;
    /// YES/PASS (true), NO/FAIL (false), or no verdict.
    std::optional<bool> verdict;
    std::optional<json> error;
    /// Complex or map document produced by subdivide, catalog and construct displacement.
    std::optional<json> artifact;

    json to_json() const;
};

/// Runs the pipeline stages the command needs. Domain errors are caught and
/// turned into an error report. Exit code: 0 YES/PASS or no verdict,
/// 1 NO/FAIL, 2 error before any verdict.
struct RunResult {
    Report report;
    int exit_code = 0;
};
RunResult run(const RunConfig& config);

/// Canonical JSON (sorted keys, two-space indent) or the stage tables.
std::string render(const Report& report, OutputFormat format);

// Stage builders, shared by the CLI and the Python bindings.
json validation_json(const GComplex& input, const GComplex& regular, int subdivisions);
json stratification_json(const Stratification& strat);
json euler_json(const Stratification& strat, const EulerReport& report);
json path_field_json(const Stratification& strat, const PathFieldDecision& d);
json cipd_json(const Stratification& strat, const CipdDecision& d);
json matching_json(const Stratification& strat, const Matching& m, const MatchingCheck& check);
json certificate_json(const GComplex& K, const DisplacementCertificate& cert);

std::string stratification_table(const Stratification& strat);
std::string euler_table(const Stratification& strat, const EulerReport& report);
std::string path_field_table(const Stratification& strat, const PathFieldDecision& d);
std::string cipd_table(const Stratification& strat, const CipdDecision& d);
std::string matching_table(const Stratification& strat, const Matching& m, const MatchingCheck& check);
std::string certificate_table(const GComplex& K, const DisplacementCertificate& cert);

}  // namespace equiflow
