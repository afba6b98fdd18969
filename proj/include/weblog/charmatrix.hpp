#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weblog/matrix.hpp"
#include "weblog/tensor.hpp"
#include "weblog/textprep.hpp"

namespace weblog {

class NoWordsSurvive : public Error {
public:
    using Error::Error;
};

// Document-frequency band for the vocabulary filter: a word is kept when
// the fraction of blogs using it (with weight above one) lies strictly
// between the bounds.
struct FilterBounds {
    double lower = 0.1;
    double upper = 0.25;
};

// Blog-word characteristic matrix (vector space model). Row i is a blog,
// column j a stemmed word, values are the accumulated location weights.
struct CharMatrix {
    std::vector<std::string> blog_labels;
    std::vector<std::string> word_labels;
    Matrix values;
};

// Vocabulary selection + matrix fill. Blogs and surviving words are laid
// out in lexicographic order so the result is deterministic. Only words
// whose weight exceeds 1 in a blog count toward its document frequency.
CharMatrix build_char_matrix(const BlogsContent& content, const FilterBounds& bounds = {});

// Labeled-link adjacency tensor: X(i,j,k) = C(i,k) + C(j,k) when blogs
// i != j both use word k, else 0. Every frontal slice is symmetric with a
// zero diagonal.
SparseTensor3 to_adjacency_tensor(const CharMatrix& cm);

// CharMatrix file: two CSV label header rows, then one CSV row of values
// per blog.
std::string write_char_matrix(const CharMatrix& cm);
CharMatrix read_char_matrix(std::string_view raw);

// Tensor file: a dims header line, then one "i j k value" quadruple per
// line, 0-based.
std::string write_tensor(const SparseTensor3& x);
SparseTensor3 read_tensor(std::string_view raw);

}  // namespace weblog
