#pragma once

#include "prealt/catalog.hpp"

namespace prealt {

// exit: 0 pass, 1 check failed, 2 usage or parse error
struct CommandResult {
    std::string output;
    int exit = 0;
};

struct RunOptions {
    unsigned workers = 1;
    std::size_t max_witnesses = 10;
    bool timing = false;
    CheckOptions check() const { return {max_witnesses, workers}; }
};
// defaults with PREALT_MAX_WITNESSES applied
RunOptions run_options_from_env();

// suites: alternative, associative, prealt, dendriform, bimodule, coalgebra, bialgebra,
// dbialgebra, form, cocycle2
CommandResult cmd_check(const std::string& path, const std::string& suite, const std::string& kind,
                        const RunOptions& opts);
CommandResult cmd_check_file(const AlgebraFile& file, const std::string& echo, const std::string& suite,
                             const std::string& kind, const RunOptions& opts);

struct ConstructArgs {
    std::string op;
    std::string sign;                 // canonical-r: minus | plus
    std::vector<long long> degrees;   // graded-split
};
// ops: semidirect, dual-bimodule, associated, graded-split, symplectic-split, al-induce,
// compatible-from-al, double, pad-double, canonical-r, dual-bialgebra. Output is the new file.
CommandResult cmd_construct(const std::string& path, const ConstructArgs& args, const RunOptions& opts);
CommandResult cmd_construct_file(const AlgebraFile& file, const ConstructArgs& args, const RunOptions& opts);

// eqs: aybe, aybe-a2, pa, coboundary-cond
CommandResult cmd_residual(const std::string& path, const std::string& eq, const RunOptions& opts);
CommandResult cmd_residual_file(const AlgebraFile& file, const std::string& echo, const std::string& eq,
                                const RunOptions& opts);

struct SearchArgs {
    std::uint64_t p = 3;
    std::size_t dim = 0;
    std::string target;     // aybe-skew, pa-sym, al-operator
    std::uint64_t cap = 10'000'000;
    std::string algebra;    // catalog name; zero algebra of `dim` when empty
};
CommandResult cmd_search(const SearchArgs& args, const RunOptions& opts);

CommandResult cmd_catalog(const std::string& name);

// The JSON report for one check run.
std::string report_json(const std::string& command, const CheckReport& rep, std::optional<double> millis = {});

}  // namespace prealt
