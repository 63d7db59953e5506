#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ksp/cli.hpp"

using namespace ksp;

namespace {

int emit(const cli::CliResult& res, const cli::RunConfig& cfg,
         const std::string& output) {
    std::string text = cfg.out == "json" ? res.report.dump(2) + "\n"
                                         : cli::render_text(res.report);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output);
        if (!f) throw error("cannot open output file: " + output);
        f << text;
    }
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ksp: species calculus workbench"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    std::string output;
    app.add_option("--trunc", cfg.trunc, "series truncation degree")
        ->capture_default_str();
    app.add_option("--nmax", cfg.n_max, "largest label-set size")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--force", cfg.force, "override the enumeration size guard");
    app.add_option("--output", output, "write the report to a file");

    std::string expr;
    auto* series = app.add_subcommand("series", "evaluate a series expression");
    series->add_option("expr", expr, "expression, e.g. 'inv(Cosh)'")->required();

    std::string kind, name;
    int n = 0;
    std::vector<std::string> actions;
    auto* poset = app.add_subcommand("poset", "build and analyze a poset");
    poset->add_option("kind", kind, "monoid | module | operad")->required();
    poset->add_option("name", name, "registered structure name")->required();
    poset->add_option("n", n, "label-set size")->required();
    poset->add_option("actions", actions, "mobius homology cm export");

    std::string kkind, kname;
    auto* koszul = app.add_subcommand("koszul", "run the Koszulness pipeline");
    koszul->add_option("kind", kkind, "monoid | module | operad")->required();
    koszul->add_option("name", kname, "registered structure name")->required();

    std::string which = "all";
    auto* verify = app.add_subcommand("verify", "check a named identity");
    verify->add_option("which", which, "identity name, or 'all'");

    // let --trunc/--nmax/--out/--force appear after the subcommand
    for (CLI::App* sc : {series, poset, koszul, verify}) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands().front()->get_name();
    try {
        cli::CliResult res;
        if (series->parsed())
            res = cli::cmd_series(expr, cfg);
        else if (poset->parsed())
            res = cli::cmd_poset(kind, name, n, actions, cfg);
        else if (koszul->parsed())
            res = cli::cmd_koszul(kkind, kname, cfg);
        else
            res = cli::cmd_verify(which, cfg);
        return emit(res, cfg, output);
    } catch (const std::exception& e) {
        nlohmann::json err = cli::error_report(command, e.what());
        if (cfg.out == "json")
            std::cerr << err.dump(2) << "\n";
        else
            std::cerr << cli::render_text(err);
        return 2;
    }
}
