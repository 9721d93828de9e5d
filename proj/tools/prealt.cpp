#include "prealt/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace prealt;

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks and constructions for alternative and pre-alternative algebras"};
    app.require_subcommand(1);
    RunOptions opts = run_options_from_env();
    app.add_option("--workers", opts.workers, "worker threads for identity sweeps")->check(CLI::PositiveNumber);
    app.add_flag("--timing", opts.timing, "include wall-clock timing in reports");
    std::string out_path;

    std::string path, suite, kind;
    auto* check = app.add_subcommand("check", "run an identity suite on an algebra file");
    check->add_option("file", path, "algebra file")->required();
    check->add_option("--suite", suite, "alternative|associative|prealt|dendriform|bimodule|coalgebra|bialgebra|dbialgebra|form|cocycle2")
        ->required();
    check->add_option("--kind", kind, "form kind or coalgebra kind");

    ConstructArgs cargs;
    std::string degrees;
    auto* construct = app.add_subcommand("construct", "build a new structure from a file");
    construct->add_option("file", path, "algebra file")->required();
    construct->add_option("--op", cargs.op, "construction")->required();
    construct->add_option("--sign", cargs.sign, "minus|plus for canonical-r");
    construct->add_option("--degrees", degrees, "comma separated degrees for graded-split");
    construct->add_option("--out", out_path, "write the file here instead of stdout");

    std::string eq;
    auto* residual = app.add_subcommand("residual", "print tensor equation residuals for the file's r");
    residual->add_option("file", path, "algebra file")->required();
    residual->add_option("--eq", eq, "aybe|aybe-a2|pa|coboundary-cond")->required();

    SearchArgs sargs;
    auto* search = app.add_subcommand("search", "exhaustive solution search over GF(p)");
    search->add_option("--field", sargs.p, "odd prime p")->required();
    search->add_option("--dim", sargs.dim, "dimension")->required();
    search->add_option("--target", sargs.target, "aybe-skew|pa-sym|al-operator")->required();
    search->add_option("--cap", sargs.cap, "maximum candidate count");
    search->add_option("--algebra", sargs.algebra, "catalog name (zero algebra if omitted)");

    std::string name;
    auto* catalog = app.add_subcommand("catalog", "print a built-in algebra file");
    catalog->add_option("name", name, "zero-<n>|n2|p2|p3-graded|octonion|halved-idempotent|halved-field-negative")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CommandResult res;
    if (*check) {
        res = cmd_check(path, suite, kind, opts);
    } else if (*construct) {
        try {
            for (const auto& d : CLI::detail::split(degrees, ','))
                if (!d.empty()) cargs.degrees.push_back(std::stoll(d));
        } catch (const std::exception&) {
            std::cerr << "bad --degrees list\n";
            return 2;
        }
        res = cmd_construct(path, cargs, opts);
    } else if (*residual) {
        res = cmd_residual(path, eq, opts);
    } else if (*search) {
        res = cmd_search(sargs, opts);
    } else {
        res = cmd_catalog(name);
    }

    if (!out_path.empty() && res.exit == 0) {
        try {
            write_text_file(out_path, res.output);
        } catch (const Error& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    } else {
        std::cout << res.output;
    }
    return res.exit;
}
