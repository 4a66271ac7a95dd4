// Command-line front end: loads a scenario file, dispatches one engine
// command, and writes the result document to stdout or --out.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 internal property-check
// failure (an audit reported violations the engine's geometry forbids).

#include "twofold/errors.hpp"
#include "twofold/scenario.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

struct GlobalArgs {
    std::string scenario_path;
    std::string out_path;
    twofold::CommandOptions options;
    std::string box_spec;
};

void add_common(CLI::App* cmd, GlobalArgs& args) {
    cmd->add_option("--scenario", args.scenario_path, "Scenario JSON file")->required();
    cmd->add_option("--out", args.out_path, "Write the result document here (default: stdout)");
    cmd->add_option("--seed", args.options.seed, "Sampling seed (echoed in the output)");
    cmd->add_option("--budget", args.options.budget, "Sample budget for audits and searches");
    cmd->add_option_function<std::string>(
        "--tolerance",
        [&args](const std::string& text) {
            args.options.tolerance = twofold::parse_rational(text);
        },
        "Elicitation tolerance as a rational, e.g. 1/4096");
}

int emit(const twofold::ResultDocument& doc, const GlobalArgs& args) {
    if (args.out_path.empty()) {
        std::cout << doc.json_text;
    } else {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << args.out_path << "\n";
            return 1;
        }
        out << doc.json_text;
    }
    return doc.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for twofold conservative, Bewley, maxmin, "
                 "and expected-utility preferences over credal sets"};
    app.require_subcommand(1);

    GlobalArgs args;
    std::string command;

    auto make = [&](const char* name, const char* help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_common(cmd, args);
        cmd->callback([&command, name]() { command = name; });
        return cmd;
    };

    CLI::App* compare = make("compare", "Compare two acts under a preference");
    compare->add_option("--pref", args.options.pref)->required();
    compare->add_option("--f", args.options.f)->required();
    compare->add_option("--g", args.options.g)->required();

    CLI::App* interval = make("interval", "Evaluation interval of an act");
    interval->add_option("--pref", args.options.pref)->required();
    interval->add_option("--f", args.options.f)->required();

    CLI::App* contours = make("contours", "Upper/lower contour polygons at an act (2 states)");
    contours->add_option("--pref", args.options.pref)->required();
    contours->add_option("--at", args.options.at)->required();
    contours->add_option("--box", args.box_spec,
                         "Clip box as x_min,x_max,y_min,y_max (rationals)");

    CLI::App* audit = make("audit", "Audit one axiom against a preference");
    audit->add_option("--pref", args.options.pref)->required();
    audit->add_option("--axiom", args.options.axiom, "Axiom id A1..A13");
    audit->add_option("--job", args.options.job, "Named audit job from the scenario");

    CLI::App* collapse = make("collapse", "Expected-utility collapse check");
    collapse->add_option("--pref", args.options.pref)->required();

    CLI::App* conservatism = make("conservatism", "Conservatism order against a Bewley engine");
    conservatism->add_option("--pref", args.options.pref)->required();
    conservatism->add_option("--pref2", args.options.pref2)->required();

    CLI::App* extension = make("extension", "Maxmin extension check (consistency + caution)");
    extension->add_option("--pref", args.options.pref)->required();
    extension->add_option("--pref2", args.options.pref2)->required();

    CLI::App* attitude = make("attitude", "Ambiguity aversion/love from set inclusion");
    attitude->add_option("--pref", args.options.pref)->required();

    CLI::App* cmp_amb = make("compare-ambiguity", "Comparative ambiguity attitudes");
    cmp_amb->add_option("--pref", args.options.pref)->required();
    cmp_amb->add_option("--pref2", args.options.pref2)->required();

    CLI::App* choice = make("choice", "Induce or check a choice instance");
    choice->add_option("--pref", args.options.pref)->required();
    choice->add_option("--instance", args.options.instance)->required();

    CLI::App* witness = make("witness", "Choice instance no Bewley preference rationalizes");
    witness->add_option("--pref", args.options.pref)->required();

    CLI::App* elicit = make("elicit", "Recover prior sets from the preference as an oracle");
    elicit->add_option("--pref", args.options.pref)->required();
    elicit->add_option("--job", args.options.job, "Named elicitation job from the scenario");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!args.box_spec.empty()) {
            std::vector<twofold::Rat> parts;
            std::string current;
            for (char c : args.box_spec + ",") {
                if (c == ',') {
                    parts.push_back(twofold::parse_rational(current));
                    current.clear();
                } else {
                    current += c;
                }
            }
            if (parts.size() != 4)
                throw twofold::ScenarioError("--box needs four comma-separated rationals");
            args.options.box = twofold::Box2{parts[0], parts[1], parts[2], parts[3]};
        }
        twofold::ScenarioFile scenario = twofold::load_scenario(args.scenario_path);
        twofold::ResultDocument doc = twofold::run_command(command, scenario, args.options);
        return emit(doc, args);
    } catch (const twofold::PropertyCheckError& e) {
        std::cerr << "property-check failure: " << e.what() << "\n";
        return 2;
    } catch (const twofold::EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
