#include "arw/walk_config.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "arw/config.hpp"
#include "arw/errors.hpp"
#include "arw/expr.hpp"

namespace arw {

namespace {

using nlohmann::ordered_json;

Rational rational_field(const ordered_json& j, const std::string& where) {
    if (!j.is_string())
        throw ConfigError(where, "rationals must be strings like \"3/2\"");
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(where, e.what());
    }
}

CoordinateSequence coords_field(const ordered_json& j, const std::string& where, int cap) {
    if (!j.is_object()) throw ConfigError(where, "expected an object of index -> rational");
    CoordinateSequence out;
    for (const auto& [key, value] : j.items()) {
        int n = 0;
        try {
            size_t used = 0;
            n = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ConfigError(where + "." + key, "coordinate keys are positive integers");
        }
        if (n < 1 || n > cap)
            throw ConfigError(where + "." + key, "coordinate index outside 1..degree_cap");
        out.set(n, rational_field(value, where + "." + key));
    }
    return out;
}

std::map<Partition, Rational> partition_map_field(const ordered_json& j,
                                                  const std::string& where, int cap) {
    if (!j.is_object()) throw ConfigError(where, "expected an object of partition -> rational");
    std::map<Partition, Rational> out;
    for (const auto& [key, value] : j.items()) {
        Partition la;
        try {
            la = Partition::from_string(key);
        } catch (const std::exception& e) {
            throw ConfigError(where + "." + key, e.what());
        }
        if (la.weight() > cap)
            throw ConfigError(where + "." + key, "partition weight exceeds degree_cap");
        Rational r = rational_field(value, where + "." + key);
        if (!r.is_zero()) out.emplace(std::move(la), std::move(r));
    }
    return out;
}

std::vector<std::pair<Rational, CoordinateSequence>> components_field(
    const ordered_json& j, const std::string& where, const char* payload, int cap) {
    if (!j.is_array() || j.empty())
        throw ConfigError(where, "expected a nonempty array of components");
    std::vector<std::pair<Rational, CoordinateSequence>> out;
    Rational total(0);
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string here = where + "[" + std::to_string(i) + "]";
        const auto& comp = j[i];
        if (!comp.is_object() || !comp.contains("prob") || !comp.contains(payload))
            throw ConfigError(here, std::string("component needs fields prob and ") + payload);
        Rational prob = rational_field(comp["prob"], here + ".prob");
        if (prob.is_negative()) throw ConfigError(here + ".prob", "probability is negative");
        total += prob;
        out.emplace_back(std::move(prob),
                         coords_field(comp[payload], here + "." + payload, cap));
    }
    if (!total.is_one())
        throw ConfigError(where, "probabilities sum to " + total.to_string() + ", expected 1");
    return out;
}

}  // namespace

WalkConfig load_walk_config(const std::string& json_text) {
    ordered_json root;
    try {
        root = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("$", e.what());
    }
    if (!root.is_object()) throw ConfigError("$", "config must be a JSON object");

    WalkConfig config;
    if (root.contains("degree_cap")) {
        if (!root["degree_cap"].is_number_integer())
            throw ConfigError("$.degree_cap", "expected an integer");
        config.cap = root["degree_cap"].get<int>();
        if (config.cap < 0 || config.cap > kMaxDegreeCap)
            throw ConfigError("$.degree_cap", "must be between 0 and " +
                                                  std::to_string(kMaxDegreeCap));
    }
    if (degree_cap() < config.cap) set_degree_cap(config.cap);

    if (!root.contains("initial") || !root["initial"].is_object())
        throw ConfigError("$.initial", "required object");
    const auto& initial = root["initial"];
    std::string kind = initial.value("kind", "");
    if (kind == "group-like") {
        config.initial_kind = StateKind::GroupLike;
        config.coords = coords_field(initial.value("coords", ordered_json::object()),
                                     "$.initial.coords", config.cap);
    } else if (kind == "pure-inner") {
        config.initial_kind = StateKind::PureInner;
        if (!initial.contains("coeffs"))
            throw ConfigError("$.initial.coeffs", "required for pure-inner states");
        config.inner_coeffs =
            partition_map_field(initial["coeffs"], "$.initial.coeffs", config.cap);
    } else if (kind == "extended") {
        config.initial_kind = StateKind::Extended;
        config.coords = coords_field(initial.value("coords", ordered_json::object()),
                                     "$.initial.coords", config.cap);
        config.second = coords_field(initial.value("d", ordered_json::object()),
                                     "$.initial.d", config.cap);
        for (const auto& [k, v] : config.second.values)
            if (2 * k > config.cap)
                throw ConfigError("$.initial.d", "extended index k needs 2k <= degree_cap");
    } else {
        throw ConfigError("$.initial.kind", "must be group-like, pure-inner or extended");
    }

    if (root.contains("steps")) {
        if (!root["steps"].is_array()) throw ConfigError("$.steps", "expected an array");
        for (size_t i = 0; i < root["steps"].size(); ++i) {
            const std::string here = "$.steps[" + std::to_string(i) + "]";
            const auto& step = root["steps"][i];
            if (!step.is_object()) throw ConfigError(here, "expected an object");
            std::string step_kind = step.value("kind", "");
            if (step_kind == "outer") {
                OuterStepSpec spec;
                spec.components = components_field(step.value("components", ordered_json()),
                                                   here + ".components", "phi", config.cap);
                config.steps.push_back(std::move(spec));
            } else if (step_kind == "inner") {
                InnerStepSpec spec;
                spec.components = components_field(step.value("components", ordered_json()),
                                                   here + ".components", "psi", config.cap);
                config.steps.push_back(std::move(spec));
            } else if (step_kind == "pleth-right") {
                if (!step.contains("m") || !step["m"].is_number_integer() ||
                    step["m"].get<int>() < 1)
                    throw ConfigError(here + ".m", "must be a positive integer");
                config.steps.push_back(PlethStepSpec{step["m"].get<int>()});
            } else if (step_kind == "pure-inner") {
                if (!step.contains("psi"))
                    throw ConfigError(here + ".psi", "required for pure-inner steps");
                config.steps.push_back(
                    PureInnerStepSpec{partition_map_field(step["psi"], here + ".psi",
                                                          config.cap)});
            } else {
                throw ConfigError(here + ".kind",
                                  "must be outer, inner, pleth-right or pure-inner");
            }

            const bool pure = config.initial_kind == StateKind::PureInner;
            const bool step_pure = step_kind == "pure-inner";
            if (config.initial_kind == StateKind::Extended)
                throw ConfigError(here, "extended states support measurement only, no steps");
            if (pure != step_pure)
                throw ConfigError(here, pure ? "pure-inner states take pure-inner steps only"
                                             : "this step kind needs a pure-inner state");
        }
    }

    if (root.contains("observables")) {
        if (!root["observables"].is_array())
            throw ConfigError("$.observables", "expected an array of expressions");
        for (size_t i = 0; i < root["observables"].size(); ++i) {
            const std::string here = "$.observables[" + std::to_string(i) + "]";
            if (!root["observables"][i].is_string())
                throw ConfigError(here, "observables are expression strings");
            std::string text = root["observables"][i].get<std::string>();
            try {
                SymFunc value = parse_symfunc(text, config.cap);
                config.observables.push_back({std::move(text), std::move(value)});
            } catch (const std::exception& e) {
                throw ConfigError(here, e.what());
            }
        }
    }

    if (root.contains("audit")) {
        const auto& audit = root["audit"];
        if (!audit.is_object()) throw ConfigError("$.audit", "expected an object");
        if (audit.contains("trials")) {
            if (!audit["trials"].is_number_integer() || audit["trials"].get<int>() < 0)
                throw ConfigError("$.audit.trials", "must be a nonnegative integer");
            config.audit.trials = audit["trials"].get<int>();
        }
        if (audit.contains("seed")) {
            if (!audit["seed"].is_number_unsigned() && !audit["seed"].is_number_integer())
                throw ConfigError("$.audit.seed", "must be an integer");
            config.audit.seed = audit["seed"].get<std::uint64_t>();
        }
    }

    if (root.contains("branch_cap")) {
        if (!root["branch_cap"].is_number_integer() || root["branch_cap"].get<long long>() < 1)
            throw ConfigError("$.branch_cap", "must be a positive integer");
        config.branch_cap = root["branch_cap"].get<long long>();
    }
    if (root.contains("out")) {
        if (!root["out"].is_string()) throw ConfigError("$.out", "must be a path string");
        config.out_dir = root["out"].get<std::string>();
    }
    return config;
}

WalkConfig load_walk_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("$", "cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_walk_config(buffer.str());
}

namespace {

std::string format_components(const std::vector<std::pair<Rational, CoordinateSequence>>& comps) {
    std::string out = "[";
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i) out.push_back(',');
        out += "(" + comps[i].first.to_string() + "," + comps[i].second.to_string() + ")";
    }
    out.push_back(']');
    return out;
}

std::string format_partition_map(const std::map<Partition, Rational>& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [la, r] : m) {
        if (!first) out.push_back(',');
        first = false;
        out += la.to_string() + ":" + r.to_string();
    }
    out.push_back('}');
    return out;
}

struct StepDescription {
    std::string kind;
    std::string params;
};

StepDescription describe(const StepSpec& step) {
    return std::visit(
        [](const auto& s) -> StepDescription {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, OuterStepSpec>)
                return {"outer", "components=" + format_components(s.components)};
            else if constexpr (std::is_same_v<T, InnerStepSpec>)
                return {"inner", "components=" + format_components(s.components)};
            else if constexpr (std::is_same_v<T, PlethStepSpec>)
                return {"pleth-right", "m=" + std::to_string(s.m)};
            else
                return {"pure-inner", "psi=" + format_partition_map(s.psi)};
        },
        step);
}

}  // namespace

std::vector<TraceRecord> run_walk(const WalkConfig& config) {
    if (degree_cap() < config.cap) set_degree_cap(config.cap);
    std::vector<TraceRecord> records;

    std::optional<MixtureState> mixture;
    std::optional<PureInnerState> pure;
    std::string init_params;
    if (config.initial_kind == StateKind::PureInner) {
        pure = PureInnerState::make(config.inner_coeffs, config.cap);
        init_params = "r=" + format_partition_map(config.inner_coeffs);
    } else if (config.initial_kind == StateKind::Extended) {
        mixture = MixtureState::extended(config.coords, config.second, config.cap);
        init_params = "c=" + config.coords.to_string() + ";d=" + config.second.to_string();
    } else {
        mixture = MixtureState::group_like(config.coords, config.cap);
        init_params = "c=" + config.coords.to_string();
    }
    // audit seeds go into the trace so a run can be replayed from it alone
    if (config.audit.trials > 0)
        init_params += ";audit_trials=" + std::to_string(config.audit.trials) +
                       ";audit_seed=" + std::to_string(config.audit.seed);

    auto snapshot = [&](int step, const std::string& kind, const std::string& params) {
        TraceRecord record;
        record.step = step;
        record.kind = kind;
        record.params = params;
        if (mixture) {
            record.branches = static_cast<long long>(mixture->branches().size());
            record.truncated = mixture->truncated();
            record.values.push_back({"@norm", mixture->weight_sum()});
            for (const auto& obs : config.observables)
                record.values.push_back({obs.text, measure(*mixture, obs.value)});
            if (config.audit.trials > 0) {
                AuditReport report = positivity_audit(
                    *mixture, config.audit.trials,
                    config.audit.seed + static_cast<std::uint64_t>(step));
                record.audit_violations = static_cast<long long>(report.violations.size());
            }
        } else {
            record.branches = static_cast<long long>(pure->coeffs.size());
            record.truncated = false;
            record.values.push_back({"@norm", pure->coefficient_sum()});
            for (const auto& obs : config.observables)
                record.values.push_back({obs.text, measure(*pure, obs.value)});
            if (config.audit.trials > 0) {
                AuditReport report = positivity_audit(
                    *pure, config.audit.trials,
                    config.audit.seed + static_cast<std::uint64_t>(step));
                record.audit_violations = static_cast<long long>(report.violations.size());
            }
        }
        records.push_back(std::move(record));
    };

    snapshot(0, "init", init_params);
    for (size_t i = 0; i < config.steps.size(); ++i) {
        const StepSpec& step = config.steps[i];
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, OuterStepSpec>)
                    mixture = outer_step(*mixture, s, config.branch_cap);
                else if constexpr (std::is_same_v<T, InnerStepSpec>)
                    mixture = inner_step(*mixture, s, config.branch_cap);
                else if constexpr (std::is_same_v<T, PlethStepSpec>)
                    mixture = pleth_step_right(*mixture, s.m);
                else
                    pure = pure_inner_step(*pure, s.psi).state;
            },
            step);
        StepDescription description = describe(step);
        snapshot(static_cast<int>(i) + 1, description.kind, description.params);
    }
    return records;
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

void write_trace_csv(const std::vector<TraceRecord>& records, std::ostream& out) {
    out << "step,kind,params,branches,observable,value_rational,value_decimal,truncated,"
           "audit_violations\n";
    for (const auto& record : records) {
        for (const auto& value : record.values) {
            out << record.step << ',' << csv_quote(record.kind) << ','
                << csv_quote(record.params) << ',' << record.branches << ','
                << csv_quote(value.expr) << ',' << csv_quote(value.value.to_string()) << ','
                << csv_quote(value.value.to_decimal()) << ','
                << (record.truncated ? "true" : "false") << ',' << record.audit_violations
                << '\n';
        }
    }
}

void write_trace_json(const std::vector<TraceRecord>& records, std::ostream& out) {
    ordered_json root = ordered_json::array();
    for (const auto& record : records) {
        ordered_json r;
        r["step"] = record.step;
        r["kind"] = record.kind;
        r["params"] = record.params;
        r["branches"] = record.branches;
        r["truncated"] = record.truncated;
        r["audit_violations"] = record.audit_violations;
        ordered_json values = ordered_json::array();
        for (const auto& value : record.values) {
            ordered_json v;
            v["expr"] = value.expr;
            v["value_rational"] = value.value.to_string();
            v["value_decimal"] = value.value.to_decimal();
            values.push_back(std::move(v));
        }
        r["observables"] = std::move(values);
        root.push_back(std::move(r));
    }
    out << root.dump(2) << '\n';
}

void write_traces(const std::vector<TraceRecord>& records,
                  const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream csv(out_dir / "trace.csv", std::ios::trunc);
        if (!csv) throw std::runtime_error("cannot open " + (out_dir / "trace.csv").string());
        write_trace_csv(records, csv);
    }
    {
        std::ofstream json(out_dir / "trace.json", std::ios::trunc);
        if (!json) throw std::runtime_error("cannot open " + (out_dir / "trace.json").string());
        write_trace_json(records, json);
    }
}

}  // namespace arw
