#pragma once

#include "twofold/audit.hpp"
#include "twofold/contours.hpp"
#include "twofold/credal.hpp"
#include "twofold/preferences.hpp"

#include <map>
#include <optional>
#include <string>

namespace twofold {

struct AuditJobSpec {
    AxiomId axiom;
    long budget = 1000;
    uint64_t seed = 0;
};

struct ElicitationJobSpec {
    Rat tolerance = Rat(1, 4096);
};

/// A choice instance as declared in a scenario: menus reference named acts;
/// recorded choices are optional (absent means "induce them").
struct ScenarioChoiceInstance {
    Rat status_quo;
    std::vector<std::pair<std::string, std::string>> menus;
    std::optional<std::vector<Chosen>> chosen;
};

/// Parsed and fully validated scenario. Every reference resolves, every
/// vector is dimension-consistent, every rational parsed exactly, and every
/// twofold-conservative entry has intersecting prior sets.
struct ScenarioFile {
    StateSpace states{std::vector<std::string>{"s0", "s1"}};
    std::map<std::string, UtilityVector> acts;
    std::map<std::string, Prior> priors;
    std::map<std::string, CredalSet> credal_sets;
    std::map<std::string, PreferenceView> preferences;
    std::map<std::string, ScenarioChoiceInstance> choice_instances;
    std::map<std::string, AuditJobSpec> audit_jobs;
    std::map<std::string, ElicitationJobSpec> elicitation_jobs;
};

ScenarioFile parse_scenario(const std::string& json_text);
ScenarioFile load_scenario(const std::string& path);

struct CommandOptions {
    std::optional<std::string> pref;
    std::optional<std::string> pref2;    // conservatism / extension / compare-ambiguity
    std::optional<std::string> f;
    std::optional<std::string> g;
    std::optional<std::string> at;       // contours
    std::optional<std::string> axiom;    // audit
    std::optional<std::string> instance; // choice
    std::optional<std::string> job;      // audit / elicit job reference
    uint64_t seed = 0;
    long budget = 1000;
    Rat tolerance = Rat(1, 4096);
    std::optional<Box2> box;
};

/// Serialized run result. `json_text` is byte-stable for identical inputs:
/// exact rationals as canonical strings, decimal approximations rendered by
/// integer arithmetic, keys sorted.
struct ResultDocument {
    std::string json_text;
    int exit_code = 0;  // 0 ok, 1 usage (thrown before a document exists), 2 property failure
};

/// Commands: compare, interval, contours, audit, collapse, conservatism,
/// extension, attitude, compare-ambiguity, choice, witness, elicit.
/// Usage and domain errors surface as exceptions (CLI exit 1); internal
/// property failures yield a document with exit code 2.
ResultDocument run_command(const std::string& command, const ScenarioFile& scenario,
                           const CommandOptions& options);

}  // namespace twofold
