#include "weblog/charmatrix.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_set>

#include "csv.hpp"

namespace weblog {

namespace {

std::string format_value(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string_view> split_lines(std::string_view raw) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= raw.size()) {
        auto end = raw.find('\n', start);
        if (end == std::string_view::npos) end = raw.size();
        std::string_view line = raw.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == raw.size()) break;
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

void check_unique(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const std::string& l : labels)
        if (!seen.insert(l).second) throw Error(std::string("duplicate ") + what + " label: " + l);
}

}  // namespace

CharMatrix build_char_matrix(const BlogsContent& content, const FilterBounds& bounds) {
    if (!(bounds.lower < bounds.upper)) throw Error("filter bounds: lower must be below upper");
    if (content.entries.empty()) throw EmptyCorpus("no blogs to build a matrix from");

    CharMatrix cm;
    for (const auto& [blog, counts] : content.entries) cm.blog_labels.push_back(blog);

    const double n_blogs = static_cast<double>(cm.blog_labels.size());
    std::map<std::string, std::size_t> doc_freq;
    for (const auto& [blog, counts] : content.entries)
        for (const auto& [word, weight] : counts)
            if (weight > 1) ++doc_freq[word];

    for (const auto& [word, count] : doc_freq) {
        double percentage = static_cast<double>(count) / n_blogs;
        if (bounds.lower < percentage && percentage < bounds.upper)
            cm.word_labels.push_back(word);
    }
    if (cm.word_labels.empty())
        throw NoWordsSurvive("no words survive the frequency filter");

    cm.values = Matrix(cm.blog_labels.size(), cm.word_labels.size(), 0.0);
    std::size_t i = 0;
    for (const auto& [blog, counts] : content.entries) {
        for (std::size_t j = 0; j < cm.word_labels.size(); ++j) {
            auto it = counts.find(cm.word_labels[j]);
            if (it != counts.end()) cm.values(i, j) = static_cast<double>(it->second);
        }
        ++i;
    }
    return cm;
}

SparseTensor3 to_adjacency_tensor(const CharMatrix& cm) {
    const std::size_t n = cm.values.rows();
    const std::size_t m = cm.values.cols();
    std::vector<SparseTensor3::Entry> entries;
    std::vector<std::size_t> users;  // blogs with a positive weight for word k
    for (std::size_t k = 0; k < m; ++k) {
        users.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (cm.values(i, k) > 0.0) users.push_back(i);
        for (std::size_t a : users)
            for (std::size_t b : users) {
                if (a == b) continue;
                entries.push_back({a, b, k, cm.values(a, k) + cm.values(b, k)});
            }
    }
    return SparseTensor3::from_entries(n, n, m, std::move(entries));
}

std::string write_char_matrix(const CharMatrix& cm) {
    std::string out = csv::join(cm.blog_labels);
    out.push_back('\n');
    out += csv::join(cm.word_labels);
    out.push_back('\n');
    for (std::size_t i = 0; i < cm.values.rows(); ++i) {
        std::vector<std::string> row;
        row.reserve(cm.values.cols());
        for (std::size_t j = 0; j < cm.values.cols(); ++j)
            row.push_back(format_value(cm.values(i, j)));
        out += csv::join(row);
        out.push_back('\n');
    }
    return out;
}

CharMatrix read_char_matrix(std::string_view raw) {
    auto lines = split_lines(raw);
    if (lines.size() < 2) throw Error("matrix file: missing label header rows");
    CharMatrix cm;
    cm.blog_labels = csv::split_line(lines[0]);
    cm.word_labels = csv::split_line(lines[1]);
    check_unique(cm.blog_labels, "blog");
    check_unique(cm.word_labels, "word");
    if (lines.size() - 2 != cm.blog_labels.size())
        throw Error("matrix file: row count does not match blog labels");
    cm.values = Matrix(cm.blog_labels.size(), cm.word_labels.size());
    for (std::size_t i = 0; i + 2 < lines.size(); ++i) {
        auto fields = csv::split_line(lines[i + 2]);
        if (fields.size() != cm.word_labels.size())
            throw Error("matrix file: bad column count on data row " + std::to_string(i + 1));
        for (std::size_t j = 0; j < fields.size(); ++j) {
            try {
                cm.values(i, j) = std::stod(fields[j]);
            } catch (const std::exception&) {
                throw Error("matrix file: bad number \"" + fields[j] + "\"");
            }
            if (!(cm.values(i, j) >= 0.0))
                throw Error("matrix file: negative or invalid value on row " +
                            std::to_string(i + 1));
        }
    }
    return cm;
}

std::string write_tensor(const SparseTensor3& x) {
    std::ostringstream out;
    out << x.dim(1) << ' ' << x.dim(2) << ' ' << x.dim(3) << '\n';
    for (const auto& e : x.entries())
        out << e.i << ' ' << e.j << ' ' << e.k << ' ' << format_value(e.value) << '\n';
    return out.str();
}

SparseTensor3 read_tensor(std::string_view raw) {
    auto lines = split_lines(raw);
    if (lines.empty()) throw Error("tensor file: missing dims header");
    std::istringstream header{std::string(lines[0])};
    std::size_t d1, d2, d3;
    if (!(header >> d1 >> d2 >> d3)) throw Error("tensor file: bad dims header");
    std::vector<SparseTensor3::Entry> entries;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        if (lines[n].empty()) continue;
        std::istringstream in{std::string(lines[n])};
        SparseTensor3::Entry e;
        if (!(in >> e.i >> e.j >> e.k >> e.value))
            throw Error("tensor file: bad entry on line " + std::to_string(n + 1));
        entries.push_back(e);
    }
    return SparseTensor3::from_entries(d1, d2, d3, std::move(entries));
}

}  // namespace weblog
