#include "twofold/scenario.hpp"

#include "twofold/elicitation.hpp"
#include "twofold/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace twofold {

namespace {

using nlohmann::json;

// --------------------------------------------------------------------------
// Parsing helpers. Every failure names the entity it came from.

Rat entity_rational(const json& node, const std::string& entity) {
    if (!node.is_string() && !node.is_number_integer())
        throw ScenarioError(entity + ": rationals must be strings like \"1/3\"");
    try {
        if (node.is_number_integer()) return Rat(node.get<long>());
        return parse_rational(node.get<std::string>());
    } catch (const EngineError& e) {
        throw ScenarioError(entity + ": " + e.what());
    }
}

RatVec entity_vector(const json& node, const std::string& entity, size_t dimension) {
    if (!node.is_array())
        throw ScenarioError(entity + ": expected an array of rationals");
    if (node.size() != dimension)
        throw ScenarioError(entity + ": expected " + std::to_string(dimension) +
                            " coordinates, got " + std::to_string(node.size()));
    RatVec out;
    for (const json& coord : node) out.push_back(entity_rational(coord, entity));
    return out;
}

template <typename Map>
const typename Map::mapped_type& resolve(const Map& map, const std::string& name,
                                         const std::string& kind, const std::string& entity) {
    auto it = map.find(name);
    if (it == map.end())
        throw ScenarioError(entity + ": unknown " + kind + " '" + name + "'");
    return it->second;
}

// --------------------------------------------------------------------------
// Serialization helpers: exact strings plus deterministic decimal shadows.

void put_rat(json& node, const std::string& key, const Rat& value) {
    node[key] = format_rational(value);
    node[key + "_approx"] = decimal_approx(value);
}

json rat_array(const RatVec& values) {
    json out = json::array();
    for (const Rat& v : values) out.push_back(format_rational(v));
    return out;
}

json rat_array_approx(const RatVec& values) {
    json out = json::array();
    for (const Rat& v : values) out.push_back(decimal_approx(v));
    return out;
}

void put_vec(json& node, const std::string& key, const RatVec& values) {
    node[key] = rat_array(values);
    node[key + "_approx"] = rat_array_approx(values);
}

json polygon_json(const Polygon2& poly) {
    json exact = json::array();
    json approx = json::array();
    for (const Point2& p : poly) {
        exact.push_back(json::array({format_rational(p.x), format_rational(p.y)}));
        approx.push_back(json::array({decimal_approx(p.x), decimal_approx(p.y)}));
    }
    json out;
    out["vertices"] = exact;
    out["vertices_approx"] = approx;
    return out;
}

json credal_set_json(const CredalSet& set) {
    json out;
    json verts = json::array();
    for (const Prior& v : set.vertices()) verts.push_back(rat_array(v.mass()));
    out["vertices"] = verts;
    if (set.dimension() <= 3) {
        json hs = json::array();
        for (const Halfspace& h : set.halfspaces()) {
            json one;
            one["normal"] = rat_array(h.normal);
            one["offset"] = format_rational(h.offset);
            hs.push_back(one);
        }
        out["halfspaces"] = hs;
    }
    return out;
}

json witness_json(const Witness& w) {
    json out;
    json acts = json::array();
    for (const UtilityVector& a : w.acts) acts.push_back(rat_array(a.payoffs()));
    out["acts"] = acts;
    out["constants"] = rat_array(w.constants);
    out["weights"] = rat_array(w.weights);
    out["tag"] = w.tag;
    return out;
}

json audit_report_json(const AuditReport& report) {
    json out;
    out["axiom"] = to_string(report.axiom);
    out["samples"] = report.samples;
    out["seed"] = report.seed;
    out["verdict"] = report.pass() ? "pass" : "fail";
    json violations = json::array();
    for (const Witness& w : report.violations) violations.push_back(witness_json(w));
    out["violations"] = violations;
    return out;
}

json choice_instance_json(const ChoiceInstance& instance) {
    json out;
    put_rat(out, "status_quo", instance.status_quo);
    json records = json::array();
    for (size_t i = 0; i < instance.menus.size(); ++i) {
        json rec;
        rec["f"] = rat_array(instance.menus[i].f.payoffs());
        rec["g"] = rat_array(instance.menus[i].g.payoffs());
        rec["chosen"] = to_string(instance.chosen[i]);
        records.push_back(rec);
    }
    out["records"] = records;
    return out;
}

// --------------------------------------------------------------------------

const PreferenceView& named_pref(const ScenarioFile& scenario,
                                 const std::optional<std::string>& name, const char* flag) {
    if (!name) throw ScenarioError(std::string("missing required option --") + flag);
    return resolve(scenario.preferences, *name, "preference", "command");
}

const UtilityVector& named_act(const ScenarioFile& scenario,
                               const std::optional<std::string>& name, const char* flag) {
    if (!name) throw ScenarioError(std::string("missing required option --") + flag);
    return resolve(scenario.acts, *name, "act", "command");
}

const TfcPreference& require_tfc(const PreferenceView& view, const std::string& name) {
    const TfcPreference* tfc = view.as_tfc();
    if (tfc == nullptr)
        throw ScenarioError("command: preference '" + name + "' is not a tfc preference");
    return *tfc;
}

ChoiceInstance materialize_instance(const ScenarioFile& scenario,
                                    const ScenarioChoiceInstance& sci,
                                    const std::string& entity) {
    ChoiceInstance out;
    out.status_quo = sci.status_quo;
    for (const auto& [f_name, g_name] : sci.menus) {
        out.menus.push_back(MenuRecord{resolve(scenario.acts, f_name, "act", entity),
                                       resolve(scenario.acts, g_name, "act", entity)});
    }
    if (sci.chosen) out.chosen = *sci.chosen;
    return out;
}

}  // namespace

ScenarioFile parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("scenario parse error: ") + e.what());
    }
    if (!root.is_object()) throw ScenarioError("scenario root must be an object");
    if (!root.contains("states") || !root["states"].is_array())
        throw ScenarioError("scenario needs a 'states' array");

    ScenarioFile scenario;
    {
        std::vector<std::string> labels;
        for (const json& s : root["states"]) {
            if (!s.is_string()) throw ScenarioError("states: labels must be strings");
            labels.push_back(s.get<std::string>());
        }
        try {
            scenario.states = StateSpace(std::move(labels));
        } catch (const EngineError& e) {
            throw ScenarioError(std::string("states: ") + e.what());
        }
    }
    size_t dim = scenario.states.size();

    if (root.contains("acts")) {
        for (const auto& [name, node] : root["acts"].items()) {
            std::string entity = "act '" + name + "'";
            scenario.acts.emplace(name, UtilityVector(entity_vector(node, entity, dim)));
        }
    }
    if (root.contains("priors")) {
        for (const auto& [name, node] : root["priors"].items()) {
            std::string entity = "prior '" + name + "'";
            try {
                scenario.priors.emplace(name, Prior(entity_vector(node, entity, dim)));
            } catch (const ScenarioError&) {
                throw;
            } catch (const EngineError& e) {
                throw ScenarioError(entity + ": " + e.what());
            }
        }
    }
    if (root.contains("credal_sets")) {
        for (const auto& [name, node] : root["credal_sets"].items()) {
            std::string entity = "credal set '" + name + "'";
            if (!node.is_array() || node.empty())
                throw ScenarioError(entity + ": expected a nonempty array of priors");
            std::vector<Prior> vertices;
            try {
                for (const json& v : node) vertices.emplace_back(entity_vector(v, entity, dim));
                scenario.credal_sets.emplace(name, CredalSet(std::move(vertices)));
            } catch (const ScenarioError&) {
                throw;
            } catch (const EngineError& e) {
                throw ScenarioError(entity + ": " + e.what());
            }
        }
    }
    if (root.contains("preferences")) {
        for (const auto& [name, node] : root["preferences"].items()) {
            std::string entity = "preference '" + name + "'";
            if (!node.is_object() || !node.contains("kind"))
                throw ScenarioError(entity + ": expected an object with a 'kind'");
            std::string kind = node["kind"].get<std::string>();
            UtilityNormalization norm;
            try {
                norm = make_normalization(
                    node.contains("scale") ? entity_rational(node["scale"], entity) : Rat(1),
                    node.contains("shift") ? entity_rational(node["shift"], entity) : Rat(0));
            } catch (const EngineError& e) {
                throw ScenarioError(entity + ": " + e.what());
            }
            auto set_ref = [&](const char* key) -> const CredalSet& {
                if (!node.contains(key))
                    throw ScenarioError(entity + ": missing '" + key + "' reference");
                return resolve(scenario.credal_sets, node[key].get<std::string>(), "credal set",
                               entity);
            };
            try {
                if (kind == "tfc") {
                    scenario.preferences.emplace(
                        name, PreferenceView(TfcPreference(norm, set_ref("C"), set_ref("D"))));
                } else if (kind == "bewley") {
                    scenario.preferences.emplace(
                        name, PreferenceView(BewleyPreference(norm, set_ref("C"))));
                } else if (kind == "maxmin") {
                    scenario.preferences.emplace(
                        name, PreferenceView(MaxminPreference(norm, set_ref("C"))));
                } else if (kind == "seu") {
                    if (!node.contains("prior"))
                        throw ScenarioError(entity + ": missing 'prior' reference");
                    scenario.preferences.emplace(
                        name, PreferenceView(SeuPreference(
                                  norm, resolve(scenario.priors, node["prior"].get<std::string>(),
                                                "prior", entity))));
                } else {
                    throw ScenarioError(entity + ": unknown kind '" + kind + "'");
                }
            } catch (const ScenarioError&) {
                throw;
            } catch (const DisjointPriorSetsError&) {
                throw ScenarioError("tfc '" + name + "': C and D disjoint");
            } catch (const EngineError& e) {
                throw ScenarioError(entity + ": " + e.what());
            }
        }
    }
    if (root.contains("choice_instances")) {
        for (const auto& [name, node] : root["choice_instances"].items()) {
            std::string entity = "choice instance '" + name + "'";
            if (!node.is_object() || !node.contains("status_quo") || !node.contains("menus"))
                throw ScenarioError(entity + ": expected 'status_quo' and 'menus'");
            ScenarioChoiceInstance sci;
            sci.status_quo = entity_rational(node["status_quo"], entity);
            for (const json& menu : node["menus"]) {
                if (!menu.is_object() || !menu.contains("f") || !menu.contains("g"))
                    throw ScenarioError(entity + ": each menu needs acts 'f' and 'g'");
                std::string f_name = menu["f"].get<std::string>();
                std::string g_name = menu["g"].get<std::string>();
                resolve(scenario.acts, f_name, "act", entity);
                resolve(scenario.acts, g_name, "act", entity);
                sci.menus.emplace_back(f_name, g_name);
            }
            if (node.contains("chosen")) {
                std::vector<Chosen> chosen;
                for (const json& c : node["chosen"]) {
                    std::string s = c.get<std::string>();
                    if (s == "f") chosen.push_back(Chosen::F);
                    else if (s == "g") chosen.push_back(Chosen::G);
                    else if (s == "x") chosen.push_back(Chosen::X);
                    else throw ScenarioError(entity + ": chosen entries must be f, g, or x");
                }
                if (chosen.size() != sci.menus.size())
                    throw ScenarioError(entity + ": chosen list length differs from menus");
                sci.chosen = std::move(chosen);
            }
            scenario.choice_instances.emplace(name, std::move(sci));
        }
    }
    if (root.contains("audit_jobs")) {
        for (const auto& [name, node] : root["audit_jobs"].items()) {
            std::string entity = "audit job '" + name + "'";
            AuditJobSpec spec;
            try {
                spec.axiom = parse_axiom_id(node.at("axiom").get<std::string>());
            } catch (const EngineError& e) {
                throw ScenarioError(entity + ": " + e.what());
            } catch (const json::exception&) {
                throw ScenarioError(entity + ": missing 'axiom'");
            }
            if (node.contains("budget")) spec.budget = node["budget"].get<long>();
            if (node.contains("seed")) spec.seed = node["seed"].get<uint64_t>();
            if (spec.budget < 1) throw ScenarioError(entity + ": budget must be positive");
            scenario.audit_jobs.emplace(name, spec);
        }
    }
    if (root.contains("elicitation_jobs")) {
        for (const auto& [name, node] : root["elicitation_jobs"].items()) {
            std::string entity = "elicitation job '" + name + "'";
            ElicitationJobSpec spec;
            if (node.contains("tolerance"))
                spec.tolerance = entity_rational(node["tolerance"], entity);
            if (spec.tolerance <= 0) throw ScenarioError(entity + ": tolerance must be positive");
            scenario.elicitation_jobs.emplace(name, spec);
        }
    }
    return scenario;
}

ScenarioFile load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

ResultDocument run_command(const std::string& command, const ScenarioFile& scenario,
                           const CommandOptions& options) {
    if (options.budget < 1) throw ScenarioError("budget must be positive");
    if (options.tolerance <= 0) throw ScenarioError("tolerance must be positive");

    json doc;
    doc["command"] = command;
    doc["seed"] = options.seed;
    doc["status"] = "ok";
    int exit_code = 0;
    json result;

    try {
        if (command == "compare") {
            const PreferenceView& pref = named_pref(scenario, options.pref, "pref");
            const UtilityVector& f = named_act(scenario, options.f, "f");
            const UtilityVector& g = named_act(scenario, options.g, "g");
            result["f"] = *options.f;
            result["g"] = *options.g;
            result["engine"] = pref.kind();
            result["comparison"] = to_string(compare(pref, f, g));
        } else if (command == "interval") {
            const PreferenceView& view = named_pref(scenario, options.pref, "pref");
            const TfcPreference& tfc = require_tfc(view, *options.pref);
            const UtilityVector& f = named_act(scenario, options.f, "f");
            EvaluationInterval interval = evaluate_interval(tfc, f);
            result["f"] = *options.f;
            put_rat(result, "lo", interval.lo);
            put_rat(result, "hi", interval.hi);
        } else if (command == "contours") {
            const PreferenceView& view = named_pref(scenario, options.pref, "pref");
            const TfcPreference& tfc = require_tfc(view, *options.pref);
            const UtilityVector& at = named_act(scenario, options.at, "at");
            Box2 box = options.box.value_or(Box2::standard());
            ContourPolygons polys = contour_polygons(tfc, at, box);
            result["at"] = *options.at;
            json box_json;
            put_rat(box_json, "x_min", box.x_min);
            put_rat(box_json, "x_max", box.x_max);
            put_rat(box_json, "y_min", box.y_min);
            put_rat(box_json, "y_max", box.y_max);
            result["box"] = box_json;
            result["upper"] = polygon_json(polys.upper);
            result["lower"] = polygon_json(polys.lower);
        } else if (command == "audit") {
            const PreferenceView& pref = named_pref(scenario, options.pref, "pref");
            AxiomId axiom;
            long budget = options.budget;
            uint64_t seed = options.seed;
            if (options.job) {
                const AuditJobSpec& spec =
                    resolve(scenario.audit_jobs, *options.job, "audit job", "command");
                axiom = spec.axiom;
                budget = spec.budget;
                seed = spec.seed;
            } else if (options.axiom) {
                try {
                    axiom = parse_axiom_id(*options.axiom);
                } catch (const EngineError& e) {
                    throw ScenarioError(std::string("command: ") + e.what());
                }
            } else {
                throw ScenarioError("audit needs --axiom or --job");
            }
            AuditReport report = audit_axiom(pref, axiom, budget, seed);
            result = audit_report_json(report);
            bool guaranteed = axiom_guaranteed(pref, axiom);
            result["guaranteed"] = guaranteed;
            if (guaranteed && !report.pass()) {
                doc["status"] = "property-failure";
                exit_code = 2;
            }
        } else if (command == "collapse") {
            const PreferenceView& view = named_pref(scenario, options.pref, "pref");
            const TfcPreference& tfc = require_tfc(view, *options.pref);
            CollapseReport report = seu_collapse_check(tfc, options.budget);
            result["is_seu"] = report.is_seu;
            if (report.witness) result["witness"] = witness_json(*report.witness);
        } else if (command == "conservatism") {
            const PreferenceView& view = named_pref(scenario, options.pref, "pref");
            const TfcPreference& tfc = require_tfc(view, *options.pref);
            const PreferenceView& view2 = named_pref(scenario, options.pref2, "pref2");
            const BewleyPreference* bewley = view2.as_bewley();
            if (bewley == nullptr)
                throw ScenarioError("command: --pref2 must name a bewley preference");
            ConservatismReport report =
                verify_conservatism_order(tfc, *bewley, options.budget, options.seed);
            result["inclusion"] = report.inclusion;
            result["behavioral"] = report.behavioral_pass ? "pass" : "fail";
            result["samples"] = report.samples;
            if (report.witness) result["witness"] = witness_json(*report.witness);
        } else if (command == "extension") {
            const PreferenceView& view = named_pref(scenario, options.pref, "pref");
            const TfcPreference& tfc = require_tfc(view, *options.pref);
            const PreferenceView& view2 = named_pref(scenario, options.pref2, "pref2");
            const MaxminPreference* maxmin = view2.as_maxmin();
            if (maxmin == nullptr)
                throw ScenarioError("command: --pref2 must name a maxmin preference");
            ExtensionReport report = verify_extension(tfc, *maxmin, options.budget, options.seed);
            result["holds"] = report.holds;
            result["consistency"] = report.consistency_pass ? "pass" : "fail";
            result["caution"] = report.caution_pass ? "pass" : "fail";
            result["samples"] = report.samples;
            if (report.witness) result["witness"] = witness_json(*report.witness);
        } else if (command == "attitude") {
            const PreferenceView& view = named_pref(scenario, options.pref, "pref");
            const TfcPreference& tfc = require_tfc(view, *options.pref);
            AttitudeReport report = ambiguity_attitude(tfc, options.budget, options.seed);
            result["averse"] = report.averse;
            result["loving"] = report.loving;
            result["caution_audit"] = audit_report_json(report.caution_audit);
            result["love_audit"] = audit_report_json(report.love_audit);
        } else if (command == "compare-ambiguity") {
            const PreferenceView& view1 = named_pref(scenario, options.pref, "pref");
            const TfcPreference& tfc1 = require_tfc(view1, *options.pref);
            const PreferenceView& view2 = named_pref(scenario, options.pref2, "pref2");
            const TfcPreference& tfc2 = require_tfc(view2, *options.pref2);
            ComparativeAmbiguityReport report =
                compare_ambiguity(tfc1, tfc2, options.budget, options.seed);
            result["more_averse"] = report.more_averse;
            result["more_loving"] = report.more_loving;
            result["samples"] = report.samples;
            if (report.aversion_witness)
                result["aversion_witness"] = witness_json(*report.aversion_witness);
            if (report.loving_witness)
                result["loving_witness"] = witness_json(*report.loving_witness);
        } else if (command == "choice") {
            const PreferenceView& pref = named_pref(scenario, options.pref, "pref");
            if (!options.instance) throw ScenarioError("choice needs --instance");
            const ScenarioChoiceInstance& sci =
                resolve(scenario.choice_instances, *options.instance, "choice instance",
                        "command");
            ChoiceInstance instance = materialize_instance(scenario, sci, "command");
            bool induced = !sci.chosen.has_value();
            if (induced)
                instance = induced_choice(pref, std::move(instance.menus), instance.status_quo);
            RationalizabilityReport check = check_weak_rationalizable(instance, pref);
            result["instance"] = *options.instance;
            result["induced"] = induced;
            result["choice"] = choice_instance_json(instance);
            result["weakly_rationalizable"] = check.ok;
            if (!check.ok) {
                result["violation_index"] = *check.violation_index;
                result["violation"] = check.detail;
            }
            result["bewley_impossible"] = bewley_impossible(instance);
            // An instance the engine itself induced must verify; anything else
            // indicates a defect in the choice layer.
            if (induced && !check.ok) {
                doc["status"] = "property-failure";
                exit_code = 2;
            }
        } else if (command == "witness") {
            const PreferenceView& view = named_pref(scenario, options.pref, "pref");
            const TfcPreference& tfc = require_tfc(view, *options.pref);
            ChoiceInstance instance = construct_tfc_only_witness(tfc);
            result["choice"] = choice_instance_json(instance);
            RationalizabilityReport check = check_weak_rationalizable(instance, view);
            result["weakly_rationalizable"] = check.ok;
            result["bewley_impossible"] = bewley_impossible(instance);
            if (!check.ok || !bewley_impossible(instance)) {
                doc["status"] = "property-failure";
                exit_code = 2;
            }
        } else if (command == "elicit") {
            const PreferenceView& view = named_pref(scenario, options.pref, "pref");
            const TfcPreference& tfc = require_tfc(view, *options.pref);
            Rat tolerance = options.tolerance;
            if (options.job) {
                const ElicitationJobSpec& spec = resolve(scenario.elicitation_jobs, *options.job,
                                                         "elicitation job", "command");
                tolerance = spec.tolerance;
            }
            PreferenceOracle oracle = [&tfc](const UtilityVector& a, const UtilityVector& b) {
                return tfc_prefers(tfc, a, b);
            };
            RecoveredSets recovered = recover_prior_sets(oracle, tfc.dimension(), tolerance);
            put_rat(result, "tolerance", tolerance);
            result["total_queries"] = recovered.total_queries;
            result["c_outer"] = credal_set_json(recovered.c_outer);
            result["d_outer"] = credal_set_json(recovered.d_outer);
            json samples = json::array();
            for (const SupportSample& s : recovered.samples) {
                json one;
                one["direction"] = rat_array(s.direction.coefficients());
                one["side"] = s.side == SupportSide::CMin ? "c-min" : "d-max";
                one["lo"] = format_rational(s.lo);
                one["hi"] = format_rational(s.hi);
                one["queries"] = s.queries;
                samples.push_back(one);
            }
            result["samples"] = samples;
        } else {
            throw ScenarioError("unknown command: " + command);
        }
    } catch (const PropertyCheckError& e) {
        doc["status"] = "property-failure";
        doc["error"] = e.what();
        doc["result"] = result;
        return ResultDocument{doc.dump(2) + "\n", 2};
    }

    doc["result"] = result;
    return ResultDocument{doc.dump(2) + "\n", exit_code};
}

}  // namespace twofold
