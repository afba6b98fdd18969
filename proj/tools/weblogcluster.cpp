#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weblog/pipeline.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::size_t> ranks;
    bool strict_paper = false;
    std::string overlap_def;
    bool allow_network = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("-c,--config", opts.config_path, "pipeline configuration file (JSON)")
        ->required();
    cmd->add_option("--ranks", opts.ranks, "override the configured decomposition ranks");
    cmd->add_flag("--strict-paper", opts.strict_paper,
                  "use the literal task-1 evaluation formula (usually dimension-inconsistent)");
    cmd->add_option("--overlap-def", opts.overlap_def, "overlap definition")
        ->check(CLI::IsMember({"pairwise", "intersection"}));
    cmd->add_flag("--allow-network", opts.allow_network, "allow fetching http(s) feed sources");
}

weblog::PipelineConfig load_config(const CommonOpts& opts) {
    weblog::PipelineConfig cfg = weblog::PipelineConfig::load_file(opts.config_path);
    if (!opts.ranks.empty()) cfg.ranks = opts.ranks;
    if (opts.strict_paper) cfg.strict_formulas = true;
    if (opts.allow_network) cfg.allow_network = true;
    if (opts.overlap_def == "pairwise") cfg.overlap_def = weblog::OverlapDef::pairwise;
    if (opts.overlap_def == "intersection") cfg.overlap_def = weblog::OverlapDef::intersection;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weblog co-clustering pipeline: feeds -> matrix -> tensor -> factors -> reports"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string method = "parafac";

    CLI::App* ingest = app.add_subcommand("ingest", "parse the feed list into a corpus file");
    add_common(ingest, opts);
    CLI::App* build =
        app.add_subcommand("build", "build the characteristic matrix and adjacency tensor");
    add_common(build, opts);
    CLI::App* decompose = app.add_subcommand("decompose", "factorize the tensor or matrix");
    add_common(decompose, opts);
    decompose->add_option("-m,--method", method, "decomposition method")
        ->check(CLI::IsMember({"parafac", "nmf"}));
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "compute similarity/overlap reports and cluster tables");
    add_common(evaluate, opts);
    CLI::App* run_all = app.add_subcommand("run-all", "run the whole pipeline");
    add_common(run_all, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        weblog::PipelineConfig cfg = load_config(opts);
        if (ingest->parsed()) return weblog::cmd_ingest(cfg, std::cout, std::cerr);
        if (build->parsed()) return weblog::cmd_build(cfg, std::cout, std::cerr);
        if (decompose->parsed())
            return weblog::cmd_decompose(cfg, method, std::cout, std::cerr);
        if (evaluate->parsed()) return weblog::cmd_evaluate(cfg, std::cout, std::cerr);
        if (run_all->parsed()) return weblog::cmd_run_all(cfg, std::cout, std::cerr);
    } catch (const weblog::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return weblog::kExitInputError;
    }
    return weblog::kExitOk;
}
