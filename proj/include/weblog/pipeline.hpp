#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weblog/charmatrix.hpp"
#include "weblog/metrics.hpp"
#include "weblog/textprep.hpp"

namespace weblog {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNumericalError = 2;

struct PipelinePaths {
    std::string feed_list = "blogfeedlist.txt";
    std::string stop_words = "stopwords.txt";
    std::string corpus = "out/corpus.jsonl";
    std::string char_matrix = "out/charmatrix.csv";
    std::string tensor = "out/tensor.txt";
    std::string factors_dir = "out/factors";
    std::string reports_dir = "out/reports";
};

struct PipelineConfig {
    std::string dataset = "dataset";
    PipelinePaths paths;
    FilterBounds bounds;
    WeightConfig weights;
    std::vector<std::size_t> ranks = {2, 4, 6, 8, 10, 12, 14};
    double epsilon = 1e-9;
    std::size_t max_iters = 500;
    std::size_t nmf_trials = 10;
    std::size_t nmf_max_iters = 300;
    double nmf_tol = 1e-6;
    std::vector<std::size_t> overlap_k = {10, 20, 30};
    std::size_t top_blogs = 10;
    std::size_t top_words = 10;
    bool strict_formulas = false;
    OverlapDef overlap_def = OverlapDef::pairwise;
    bool allow_network = false;

    // Relative paths inside the file are resolved against its directory.
    static PipelineConfig load_file(const std::string& path);
    static PipelineConfig from_json(std::string_view text, const std::string& base_dir = "");
};

int cmd_ingest(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_build(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_decompose(const PipelineConfig& cfg, const std::string& method, std::ostream& out,
                  std::ostream& err);
int cmd_evaluate(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_run_all(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);

// Factor file naming inside factors_dir, e.g. parafac_r4.json.
std::string factor_file_name(const std::string& method, std::size_t rank);

}  // namespace weblog
