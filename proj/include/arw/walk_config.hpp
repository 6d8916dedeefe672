#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "arw/walk.hpp"

namespace arw {

enum class StateKind { GroupLike, PureInner, Extended };

struct ObservableSpec {
    std::string text;
    SymFunc value;
};

struct AuditSettings {
    int trials = 0;
    std::uint64_t seed = 0;
};

/// Declarative walk description, loaded from JSON. Rationals travel as
/// strings "a/b" so exactness survives serialization.
struct WalkConfig {
    int cap = 12;
    StateKind initial_kind = StateKind::GroupLike;
    CoordinateSequence coords;                    // group-like / extended
    CoordinateSequence second;                    // extended only
    std::map<Partition, Rational> inner_coeffs;   // pure-inner only
    std::vector<StepSpec> steps;
    std::vector<ObservableSpec> observables;
    AuditSettings audit;
    long long branch_cap = -1;                    // < 0: configured default
    std::optional<std::string> out_dir;
};

/// Parses and validates; throws ConfigError with a field path on any problem.
WalkConfig load_walk_config(const std::string& json_text);
WalkConfig load_walk_config_file(const std::filesystem::path& path);

struct ObservedValue {
    std::string expr;
    Rational value;
};

/// Snapshot after one step (step 0 is the initial state). The synthetic
/// observable "@norm" reports the normalization sum: total branch weight for
/// mixture states, sum of coefficients for pure-inner states.
struct TraceRecord {
    int step = 0;
    std::string kind;
    std::string params;
    long long branches = 0;
    std::vector<ObservedValue> values;   // "@norm" first, then config observables
    bool truncated = false;
    long long audit_violations = -1;     // -1: auditing disabled
};

/// Executes the walk; deterministic given the config (audit seeds derive from
/// the configured seed and the step index).
std::vector<TraceRecord> run_walk(const WalkConfig& config);

void write_trace_csv(const std::vector<TraceRecord>& records, std::ostream& out);
void write_trace_json(const std::vector<TraceRecord>& records, std::ostream& out);

/// Writes trace.csv and trace.json under out_dir (created if needed).
void write_traces(const std::vector<TraceRecord>& records,
                  const std::filesystem::path& out_dir);

}  // namespace arw
