#include "weblog/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "weblog/decomp.hpp"

namespace weblog {

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, std::string_view content) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out) throw Error("error writing " + path);
}

std::string resolve(const std::string& base_dir, const std::string& path) {
    if (base_dir.empty() || path.empty() || fs::path(path).is_absolute()) return path;
    return (fs::path(base_dir) / path).lexically_normal().string();
}

std::string format_score(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Exceptions signalling bad or missing input data rather than numerical
// trouble.
int classify(const Error& e) {
    if (dynamic_cast<const InvalidRank*>(&e) || dynamic_cast<const NegativeInput*>(&e) ||
        dynamic_cast<const ZeroColumn*>(&e) || dynamic_cast<const DimensionMismatch*>(&e) ||
        dynamic_cast<const ZeroVector*>(&e))
        return kExitNumericalError;
    return kExitInputError;
}

CharMatrix load_char_matrix(const PipelineConfig& cfg) {
    return read_char_matrix(slurp(cfg.paths.char_matrix));
}

void write_cluster_table_file(const std::string& path,
                              const std::vector<ClusterTable>& tables) {
    std::string out;
    for (const ClusterTable& t : tables) {
        out += "# Group " + std::to_string(t.group + 1) + "\n";
        out += "blog,score,word,score\n";
        std::size_t rows = std::max(t.blogs.size(), t.words.size());
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<std::string> fields(4);
            if (r < t.blogs.size()) {
                fields[0] = t.blogs[r].first;
                fields[1] = format_score(t.blogs[r].second);
            }
            if (r < t.words.size()) {
                fields[2] = t.words[r].first;
                fields[3] = format_score(t.words[r].second);
            }
            out += csv::join(fields);
            out.push_back('\n');
        }
        out.push_back('\n');
    }
    spit(path, out);
}

}  // namespace

std::string factor_file_name(const std::string& method, std::size_t rank) {
    return method + "_r" + std::to_string(rank) + ".json";
}

PipelineConfig PipelineConfig::load_file(const std::string& path) {
    std::string base = fs::path(path).parent_path().string();
    return from_json(slurp(path), base);
}

PipelineConfig PipelineConfig::from_json(std::string_view text, const std::string& base_dir) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error("config: not a JSON object");
    PipelineConfig cfg;
    try {
        cfg.dataset = j.value("dataset", cfg.dataset);
        if (j.contains("paths")) {
            const auto& p = j.at("paths");
            cfg.paths.feed_list = p.value("feed_list", cfg.paths.feed_list);
            cfg.paths.stop_words = p.value("stop_words", cfg.paths.stop_words);
            cfg.paths.corpus = p.value("corpus", cfg.paths.corpus);
            cfg.paths.char_matrix = p.value("char_matrix", cfg.paths.char_matrix);
            cfg.paths.tensor = p.value("tensor", cfg.paths.tensor);
            cfg.paths.factors_dir = p.value("factors_dir", cfg.paths.factors_dir);
            cfg.paths.reports_dir = p.value("reports_dir", cfg.paths.reports_dir);
        }
        if (j.contains("bounds")) {
            cfg.bounds.lower = j.at("bounds").value("lower", cfg.bounds.lower);
            cfg.bounds.upper = j.at("bounds").value("upper", cfg.bounds.upper);
        }
        if (j.contains("weights")) {
            const auto& w = j.at("weights");
            cfg.weights.description_weight = w.value("description", cfg.weights.description_weight);
            cfg.weights.post_title_weight = w.value("post_title", cfg.weights.post_title_weight);
            cfg.weights.word_weight = w.value("word", cfg.weights.word_weight);
        }
        cfg.ranks = j.value("ranks", cfg.ranks);
        cfg.epsilon = j.value("epsilon", cfg.epsilon);
        cfg.max_iters = j.value("max_iters", cfg.max_iters);
        if (j.contains("nmf")) {
            const auto& n = j.at("nmf");
            cfg.nmf_trials = n.value("trials", cfg.nmf_trials);
            cfg.nmf_max_iters = n.value("max_iters", cfg.nmf_max_iters);
            cfg.nmf_tol = n.value("tol", cfg.nmf_tol);
        }
        cfg.overlap_k = j.value("overlap_k", cfg.overlap_k);
        if (j.contains("tables")) {
            cfg.top_blogs = j.at("tables").value("top_blogs", cfg.top_blogs);
            cfg.top_words = j.at("tables").value("top_words", cfg.top_words);
        }
        if (j.contains("flags")) {
            const auto& f = j.at("flags");
            cfg.strict_formulas = f.value("strict_paper", cfg.strict_formulas);
            cfg.allow_network = f.value("allow_network", cfg.allow_network);
            std::string def = f.value("overlap_def", std::string("pairwise"));
            if (def == "pairwise") cfg.overlap_def = OverlapDef::pairwise;
            else if (def == "intersection") cfg.overlap_def = OverlapDef::intersection;
            else throw Error("config: overlap_def must be pairwise or intersection");
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("config: ") + e.what());
    }
    for (std::size_t r : cfg.ranks)
        if (r < 1) throw Error("config: ranks must be positive");
    for (std::size_t k : cfg.overlap_k)
        if (k < 1) throw Error("config: overlap k values must be positive");

    for (std::string* p : {&cfg.paths.feed_list, &cfg.paths.stop_words, &cfg.paths.corpus,
                           &cfg.paths.char_matrix, &cfg.paths.tensor, &cfg.paths.factors_dir,
                           &cfg.paths.reports_dir})
        *p = resolve(base_dir, *p);
    return cfg;
}

int cmd_ingest(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (!fs::exists(cfg.paths.stop_words)) throw Error("missing " + cfg.paths.stop_words);
        FeedList list = read_feed_list(slurp(cfg.paths.feed_list));
        std::vector<FeedDocument> docs;
        std::size_t skipped = 0;
        for (const std::string& locator : list.entries) {
            try {
                docs.push_back(parse_feed(load_source(locator, cfg.allow_network)));
                out << "ok:   " << locator << "\n";
            } catch (const Error& e) {
                ++skipped;
                out << "skip: " << locator << " (" << e.what() << ")\n";
            }
        }
        if (docs.empty()) throw EmptyCorpus("every source failed");
        spit(cfg.paths.corpus, write_corpus(docs));
        out << "ingested " << docs.size() << " of " << list.entries.size() << " sources ("
            << skipped << " skipped) -> " << cfg.paths.corpus << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "ingest: " << e.what() << "\n";
        return classify(e);
    }
}

int cmd_build(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        auto docs = read_corpus(slurp(cfg.paths.corpus));
        StopWordSet stop = StopWordSet::from_text(slurp(cfg.paths.stop_words));
        BlogsContent content = content_from_corpus(docs, stop, cfg.weights, &err);
        CharMatrix cm = build_char_matrix(content, cfg.bounds);
        SparseTensor3 x = to_adjacency_tensor(cm);
        spit(cfg.paths.char_matrix, write_char_matrix(cm));
        spit(cfg.paths.tensor, write_tensor(x));
        out << "matrix: " << cm.values.rows() << " blogs x " << cm.values.cols() << " words -> "
            << cfg.paths.char_matrix << "\n";
        out << "tensor: " << x.dim(1) << " x " << x.dim(2) << " x " << x.dim(3) << ", "
            << x.nnz() << " nonzeros -> " << cfg.paths.tensor << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "build: " << e.what() << "\n";
        return classify(e);
    }
}

int cmd_decompose(const PipelineConfig& cfg, const std::string& method, std::ostream& out,
                  std::ostream& err) {
    try {
        if (method != "parafac" && method != "nmf")
            throw Error("method must be parafac or nmf");
        fs::create_directories(cfg.paths.factors_dir);
        if (method == "parafac") {
            SparseTensor3 x = read_tensor(slurp(cfg.paths.tensor));
            for (std::size_t rank : cfg.ranks) {
                Timer timer;
                ParafacFactors f = greedy_parafac(x, rank, cfg.epsilon, cfg.max_iters, &out);
                std::string path =
                    (fs::path(cfg.paths.factors_dir) / factor_file_name("parafac", rank)).string();
                spit(path, write_parafac(f));
                out << "parafac rank " << rank << " in " << format_score(timer.seconds())
                    << "s -> " << path << "\n";
            }
        } else {
            CharMatrix cm = load_char_matrix(cfg);
            Matrix cstar = ncw_normalize(cm.values);
            for (std::size_t rank : cfg.ranks) {
                Timer timer;
                NmfFactors f =
                    nmf_multiplicative(cstar, rank, cfg.nmf_trials, cfg.nmf_max_iters, cfg.nmf_tol);
                std::string path =
                    (fs::path(cfg.paths.factors_dir) / factor_file_name("nmf", rank)).string();
                spit(path, write_nmf(f));
                out << "nmf rank " << rank << ": objective " << f.objective << " (trial "
                    << f.trial_seed << ", " << f.iterations << " iterations) in "
                    << format_score(timer.seconds()) << "s -> " << path << "\n";
            }
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "decompose: " << e.what() << "\n";
        return classify(e);
    }
}

int cmd_evaluate(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        CharMatrix cm = load_char_matrix(cfg);
        SimMatrices sim = similarity_matrices(cm.values);
        QueryVectors q = QueryVectors::all_ones(cm.values.rows(), cm.values.cols());

        std::string similarity_csv = "method,dataset,R,task,similarity\n";
        std::string overlap_csv = "method,dataset,R,k,overlap\n";

        for (const std::string& method : {std::string("parafac"), std::string("nmf")}) {
            for (std::size_t rank : cfg.ranks) {
                std::string path =
                    (fs::path(cfg.paths.factors_dir) / factor_file_name(method, rank)).string();
                if (!fs::exists(path))
                    throw Error("missing factor file " + path + "; run decompose first");
                Matrix doc_factor, term_factor;
                if (method == "parafac") {
                    ParafacFactors f = read_parafac(slurp(path));
                    doc_factor = f.hub;
                    term_factor = f.term;
                } else {
                    NmfFactors f = read_nmf(slurp(path));
                    doc_factor = f.u;
                    term_factor = f.v;
                }

                for (int task = 1; task <= 4; ++task) {
                    TaskResult r =
                        task_vectors(task, cm.values, sim, doc_factor, term_factor, q,
                                     cfg.strict_formulas);
                    similarity_csv += method + "," + csv::escape(cfg.dataset) + "," +
                                      std::to_string(rank) + "," + std::to_string(task) + "," +
                                      format_score(r.similarity) + "\n";
                }

                auto tables = extract_cluster_tables(doc_factor, term_factor, cm.blog_labels,
                                                     cm.word_labels, cfg.top_blogs, cfg.top_words);
                std::string table_path =
                    (fs::path(cfg.paths.reports_dir) /
                     ("clusters_" + method + "_r" + std::to_string(rank) + ".csv"))
                        .string();
                write_cluster_table_file(table_path, tables);

                if (rank >= 2) {
                    // Full ranked lists per group drive the overlap metric.
                    auto full = extract_cluster_tables(doc_factor, term_factor, cm.blog_labels,
                                                       cm.word_labels, cm.blog_labels.size(), 0);
                    std::vector<std::vector<std::string>> rankings;
                    for (const ClusterTable& t : full) {
                        std::vector<std::string> names;
                        names.reserve(t.blogs.size());
                        for (const auto& [label, score] : t.blogs) names.push_back(label);
                        rankings.push_back(std::move(names));
                    }
                    for (std::size_t k : cfg.overlap_k) {
                        if (k > cm.blog_labels.size()) {
                            err << "evaluate: skipping overlap k=" << k << " (only "
                                << cm.blog_labels.size() << " blogs)\n";
                            continue;
                        }
                        double overlap = fraction_overlap(rankings, k, cfg.overlap_def);
                        overlap_csv += method + "," + csv::escape(cfg.dataset) + "," +
                                       std::to_string(rank) + "," + std::to_string(k) + "," +
                                       format_score(overlap) + "\n";
                    }
                }
            }
        }

        std::string sim_path = (fs::path(cfg.paths.reports_dir) / "similarity.csv").string();
        std::string ovl_path = (fs::path(cfg.paths.reports_dir) / "overlap.csv").string();
        spit(sim_path, similarity_csv);
        spit(ovl_path, overlap_csv);
        out << "reports written to " << cfg.paths.reports_dir << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "evaluate: " << e.what() << "\n";
        return classify(e);
    }
}

int cmd_run_all(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
    if (int rc = cmd_ingest(cfg, out, err); rc != kExitOk) return rc;
    if (int rc = cmd_build(cfg, out, err); rc != kExitOk) return rc;
    if (int rc = cmd_decompose(cfg, "parafac", out, err); rc != kExitOk) return rc;
    if (int rc = cmd_decompose(cfg, "nmf", out, err); rc != kExitOk) return rc;
    return cmd_evaluate(cfg, out, err);
}

}  // namespace weblog
