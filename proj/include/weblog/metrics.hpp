#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weblog/decomp.hpp"
#include "weblog/matrix.hpp"

namespace weblog {

class KTooLarge : public Error {
public:
    using Error::Error;
};

class SingleGroup : public Error {
public:
    using Error::Error;
};

// Cosine similarity matrices over the rows (blogs) and columns (words) of
// the characteristic matrix. Zero rows/columns get cosine 0 against
// everything, themselves included, and are flagged.
struct SimMatrices {
    Matrix blogs;  // N x N
    Matrix words;  // M x M
    std::vector<bool> zero_blog;
    std::vector<bool> zero_word;
};

struct QueryVectors {
    Vector q_blog;
    Vector q_word;

    static QueryVectors all_ones(std::size_t n_blogs, std::size_t n_words) {
        return {Vector(n_blogs, 1.0), Vector(n_words, 1.0)};
    }
};

// One evaluation task: the standard vector comes from the characteristic
// matrix (or its similarity matrices), the decomposition vector from the
// factor matrices, and `similarity` is their cosine.
struct TaskResult {
    int task = 0;
    Vector v_std;
    Vector v_dec;
    double similarity = 0.0;
    bool degenerate = false;  // a zero result vector forced similarity 0
};

enum class OverlapDef {
    pairwise,      // mean over group pairs of |top_k ^ top_k| / k
    intersection,  // |intersection of all groups' top_k| / k
};

struct ClusterTable {
    std::size_t group = 0;
    std::vector<std::pair<std::string, double>> blogs;
    std::vector<std::pair<std::string, double>> words;
};

SimMatrices similarity_matrices(const Matrix& c);

// Tasks: 1 blogs-from-word-query, 2 words-from-blog-query, 3 blogs-from-
// blog-query, 4 words-from-word-query. doc_factor is the blog-side factor
// matrix (hub or U), term_factor the word-side one (term or V). With
// strict_formulas set, task 1 uses the literal textbook chain, which is
// dimensionally inconsistent for N != M and then throws DimensionMismatch.
TaskResult task_vectors(int task, const Matrix& c, const SimMatrices& sim,
                        const Matrix& doc_factor, const Matrix& term_factor,
                        const QueryVectors& q, bool strict_formulas = false);

TaskResult task_vectors(int task, const Matrix& c, const SimMatrices& sim,
                        const ParafacFactors& f, const QueryVectors& q,
                        bool strict_formulas = false);
TaskResult task_vectors(int task, const Matrix& c, const SimMatrices& sim, const NmfFactors& f,
                        const QueryVectors& q, bool strict_formulas = false);

// Share of common members among the top-k entries of the groups' ranked
// blog lists.
double fraction_overlap(const std::vector<std::vector<std::string>>& rankings, std::size_t k,
                        OverlapDef def = OverlapDef::pairwise);

// Per-group ranked blog and word lists, scores descending, ties broken by
// label. Requested sizes are clamped to the label counts.
std::vector<ClusterTable> extract_cluster_tables(const Matrix& doc_factor,
                                                 const Matrix& term_factor,
                                                 const std::vector<std::string>& blog_labels,
                                                 const std::vector<std::string>& word_labels,
                                                 std::size_t top_blogs, std::size_t top_words);

std::vector<ClusterTable> extract_cluster_tables(const ParafacFactors& f,
                                                 const std::vector<std::string>& blog_labels,
                                                 const std::vector<std::string>& word_labels,
                                                 std::size_t top_blogs, std::size_t top_words);
std::vector<ClusterTable> extract_cluster_tables(const NmfFactors& f,
                                                 const std::vector<std::string>& blog_labels,
                                                 const std::vector<std::string>& word_labels,
                                                 std::size_t top_blogs, std::size_t top_words);

}  // namespace weblog
