#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "igusa/errors.hpp"
#include "igusa/parser.hpp"
#include "igusa/report.hpp"

using namespace igusa;

namespace {

struct Opts {
    std::string poly;
    std::string vars;
    std::string zeta = "global";
    std::string subdivision = "simplicial";
    long long q = 5;
    long long budget = kDefaultBudget;
    int oracle_depth = 0;
    bool extra_rays = false;
    bool force = false;
};

void add_common(CLI::App* sub, Opts& o, CLI::Option** json_opt) {
    sub->add_option("--poly", o.poly, "mapping; components separated by ';'")->required();
    sub->add_option("--vars", o.vars, "comma-separated variable names")->required();
    sub->add_option("--q", o.q, "residue field cardinality (prime)");
    sub->add_option("--zeta", o.zeta, "global|origin|both")
        ->check(CLI::IsMember({"global", "origin", "both"}));
    sub->add_option("--subdivision", o.subdivision, "simplicial|simple")
        ->check(CLI::IsMember({"simplicial", "simple"}));
    sub->add_option("--oracle", o.oracle_depth, "oracle depth J (0 = skip)");
    sub->add_flag("--extra-rays", o.extra_rays, "report candidate poles of the extra rays");
    sub->add_flag("--force", o.force, "compute even when non-degeneracy fails");
    sub->add_option("--budget", o.budget, "enumeration budget in points");
    *json_opt = sub->add_option("--json", "emit JSON (to stdout when no path is given)")
                    ->expected(0, 1);
}

RunConfig to_config(const Opts& o, RunConfig::Command cmd) {
    RunConfig c;
    c.command = cmd;
    c.poly_text = o.poly;
    c.vars = parse_variable_list(o.vars);
    c.q = o.q;
    if (o.zeta == "origin")
        c.zeta = RunConfig::ZetaSelection::Origin;
    else if (o.zeta == "both")
        c.zeta = RunConfig::ZetaSelection::Both;
    else
        c.zeta = RunConfig::ZetaSelection::Global;
    c.subdivision = (o.subdivision == "simple") ? RunConfig::Subdivision::Simple
                                                : RunConfig::Subdivision::Simplicial;
    c.oracle_depth = o.oracle_depth;
    c.extra_rays = o.extra_rays;
    c.force = o.force;
    c.budget = o.budget;
    return c;
}

int emit(const Report& report, const CLI::Option* json_opt, bool oracle_shape) {
    bool json_requested = json_opt->count() > 0;
    std::string path;
    if (json_requested && !json_opt->results().empty()) path = json_opt->results()[0];
    std::string json;
    if (json_requested)
        json = oracle_shape ? emit_oracle_json(report) : emit_json(report);
    if (json_requested && path.empty()) {
        std::cout << json;
    } else {
        std::cout << emit_text(report);
        if (json_requested) {
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << path << "\n";
                return 1;
            }
            out << json;
        }
    }
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Igusa local zeta functions of polynomial mappings via Newton polyhedra"};
    app.require_subcommand(1);
    Opts o;
    CLI::Option* json_opt = nullptr;

    auto* compute = app.add_subcommand("compute", "polyhedron, fan, zeta, poles, oracle");
    auto* check = app.add_subcommand("check", "non-degeneracy verdicts only");
    auto* oracle = app.add_subcommand("oracle", "congruence counts and series");
    auto* poles = app.add_subcommand("poles", "candidate and actual poles");
    for (auto* sub : {compute, check, oracle, poles}) {
        CLI::Option* jo = nullptr;
        add_common(sub, o, &jo);
        sub->parse_complete_callback([&json_opt, jo]() { json_opt = jo; });
    }

    CLI11_PARSE(app, argc, argv);

    RunConfig::Command cmd = RunConfig::Command::Compute;
    bool oracle_shape = false;
    if (check->parsed()) cmd = RunConfig::Command::Check;
    if (oracle->parsed()) {
        cmd = RunConfig::Command::Oracle;
        oracle_shape = true;
    }
    if (poles->parsed()) cmd = RunConfig::Command::Poles;

    try {
        Report report = run(to_config(o, cmd));
        return emit(report, json_opt, oracle_shape);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const DegeneracyError& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
