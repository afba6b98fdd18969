#include "weblog/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace weblog {

namespace {

double cosine_or_zero(const Vector& a, const Vector& b, bool* flagged = nullptr) {
    double na = l2_norm(a), nb = l2_norm(b);
    if (na == 0.0 || nb == 0.0) {
        if (flagged) *flagged = true;
        return 0.0;
    }
    return dot(a, b) / (na * nb);
}

std::vector<std::pair<std::string, double>> ranked(const Matrix& factor, std::size_t col,
                                                   const std::vector<std::string>& labels,
                                                   std::size_t top) {
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (factor(a, col) != factor(b, col)) return factor(a, col) > factor(b, col);
        return labels[a] < labels[b];
    });
    top = std::min(top, labels.size());
    std::vector<std::pair<std::string, double>> out;
    out.reserve(top);
    for (std::size_t n = 0; n < top; ++n)
        out.emplace_back(labels[order[n]], factor(order[n], col));
    return out;
}

}  // namespace

SimMatrices similarity_matrices(const Matrix& c) {
    if (c.rows() == 0 || c.cols() == 0) throw DimensionMismatch("similarity: empty matrix");
    const std::size_t n = c.rows(), m = c.cols();
    SimMatrices sim;
    sim.blogs = Matrix(n, n);
    sim.words = Matrix(m, m);
    sim.zero_blog.assign(n, false);
    sim.zero_word.assign(m, false);

    Vector row_norm(n, 0.0), col_norm(m, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            row_norm[i] += c(i, j) * c(i, j);
            col_norm[j] += c(i, j) * c(i, j);
        }
    for (std::size_t i = 0; i < n; ++i) {
        row_norm[i] = std::sqrt(row_norm[i]);
        sim.zero_blog[i] = row_norm[i] == 0.0;
    }
    for (std::size_t j = 0; j < m; ++j) {
        col_norm[j] = std::sqrt(col_norm[j]);
        sim.zero_word[j] = col_norm[j] == 0.0;
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (sim.zero_blog[i]) continue;
        sim.blogs(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sim.zero_blog[j]) continue;
            double s = 0.0;
            for (std::size_t p = 0; p < m; ++p) s += c(i, p) * c(j, p);
            s /= row_norm[i] * row_norm[j];
            sim.blogs(i, j) = s;
            sim.blogs(j, i) = s;
        }
    }
    for (std::size_t p = 0; p < m; ++p) {
        if (sim.zero_word[p]) continue;
        sim.words(p, p) = 1.0;
        for (std::size_t q = p + 1; q < m; ++q) {
            if (sim.zero_word[q]) continue;
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += c(i, p) * c(i, q);
            s /= col_norm[p] * col_norm[q];
            sim.words(p, q) = s;
            sim.words(q, p) = s;
        }
    }
    return sim;
}

TaskResult task_vectors(int task, const Matrix& c, const SimMatrices& sim,
                        const Matrix& doc_factor, const Matrix& term_factor,
                        const QueryVectors& q, bool strict_formulas) {
    if (task < 1 || task > 4) throw Error("task must be 1..4");
    if (doc_factor.rows() != c.rows() || term_factor.rows() != c.cols() ||
        doc_factor.cols() != term_factor.cols())
        throw DimensionMismatch("task_vectors: factor shapes do not match the matrix");
    if (q.q_blog.size() != c.rows() || q.q_word.size() != c.cols())
        throw DimensionMismatch("task_vectors: query lengths do not match the matrix");

    TaskResult res;
    res.task = task;
    switch (task) {
        case 1:
            res.v_std = matvec(c, q.q_word);
            if (strict_formulas) {
                // Literal published chain (doc_factor^T term_factor) q_word:
                // defined only when the blog and word counts coincide and
                // the rank equals the word count.
                if (doc_factor.rows() != term_factor.rows())
                    throw DimensionMismatch(
                        "strict task-1 formula needs as many blogs as words");
                Matrix chain = matmul(transpose(doc_factor), term_factor);
                if (chain.cols() != q.q_word.size())
                    throw DimensionMismatch("strict task-1 formula needs rank == word count");
                res.v_dec = matvec(chain, q.q_word);
            } else {
                res.v_dec = matvec(doc_factor, tmatvec(term_factor, q.q_word));
            }
            break;
        case 2:
            res.v_std = tmatvec(c, q.q_blog);
            res.v_dec = matvec(term_factor, tmatvec(doc_factor, q.q_blog));
            break;
        case 3:
            res.v_std = matvec(sim.blogs, q.q_blog);
            res.v_dec = matvec(doc_factor, tmatvec(doc_factor, q.q_blog));
            break;
        default:
            res.v_std = matvec(sim.words, q.q_word);
            res.v_dec = matvec(term_factor, tmatvec(term_factor, q.q_word));
            break;
    }
    res.similarity = cosine_or_zero(res.v_std, res.v_dec, &res.degenerate);
    return res;
}

TaskResult task_vectors(int task, const Matrix& c, const SimMatrices& sim,
                        const ParafacFactors& f, const QueryVectors& q, bool strict_formulas) {
    return task_vectors(task, c, sim, f.hub, f.term, q, strict_formulas);
}

TaskResult task_vectors(int task, const Matrix& c, const SimMatrices& sim, const NmfFactors& f,
                        const QueryVectors& q, bool strict_formulas) {
    return task_vectors(task, c, sim, f.u, f.v, q, strict_formulas);
}

double fraction_overlap(const std::vector<std::vector<std::string>>& rankings, std::size_t k,
                        OverlapDef def) {
    if (rankings.size() < 2) throw SingleGroup("overlap needs at least two groups");
    if (k < 1) throw KTooLarge("k must be positive");
    for (const auto& list : rankings)
        if (list.size() < k)
            throw KTooLarge("k=" + std::to_string(k) + " exceeds a ranking of size " +
                            std::to_string(list.size()));

    std::vector<std::unordered_set<std::string>> tops;
    tops.reserve(rankings.size());
    for (const auto& list : rankings)
        tops.emplace_back(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(k));

    if (def == OverlapDef::pairwise) {
        double total = 0.0;
        std::size_t pairs = 0;
        for (std::size_t a = 0; a < tops.size(); ++a)
            for (std::size_t b = a + 1; b < tops.size(); ++b) {
                std::size_t common = 0;
                for (const std::string& s : tops[a]) common += tops[b].count(s);
                total += static_cast<double>(common) / static_cast<double>(k);
                ++pairs;
            }
        return total / static_cast<double>(pairs);
    }

    std::unordered_set<std::string> common = tops.front();
    for (std::size_t a = 1; a < tops.size(); ++a) {
        std::unordered_set<std::string> next;
        for (const std::string& s : common)
            if (tops[a].count(s)) next.insert(s);
        common = std::move(next);
    }
    return static_cast<double>(common.size()) / static_cast<double>(k);
}

std::vector<ClusterTable> extract_cluster_tables(const Matrix& doc_factor,
                                                 const Matrix& term_factor,
                                                 const std::vector<std::string>& blog_labels,
                                                 const std::vector<std::string>& word_labels,
                                                 std::size_t top_blogs, std::size_t top_words) {
    if (doc_factor.rows() != blog_labels.size() || term_factor.rows() != word_labels.size())
        throw DimensionMismatch("cluster tables: label counts do not match factors");
    std::vector<ClusterTable> tables;
    for (std::size_t r = 0; r < doc_factor.cols(); ++r) {
        ClusterTable t;
        t.group = r;
        t.blogs = ranked(doc_factor, r, blog_labels, top_blogs);
        t.words = ranked(term_factor, r, word_labels, top_words);
        tables.push_back(std::move(t));
    }
    return tables;
}

std::vector<ClusterTable> extract_cluster_tables(const ParafacFactors& f,
                                                 const std::vector<std::string>& blog_labels,
                                                 const std::vector<std::string>& word_labels,
                                                 std::size_t top_blogs, std::size_t top_words) {
    return extract_cluster_tables(f.hub, f.term, blog_labels, word_labels, top_blogs, top_words);
}

std::vector<ClusterTable> extract_cluster_tables(const NmfFactors& f,
                                                 const std::vector<std::string>& blog_labels,
                                                 const std::vector<std::string>& word_labels,
                                                 std::size_t top_blogs, std::size_t top_words) {
    return extract_cluster_tables(f.u, f.v, blog_labels, word_labels, top_blogs, top_words);
}

}  // namespace weblog
