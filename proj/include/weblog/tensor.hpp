#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "weblog/matrix.hpp"

namespace weblog {

class SameMode : public Error {
public:
    using Error::Error;
};

// 3-way tensor in coordinate format. Entries are kept sorted by (k, i, j)
// so frontal slices are contiguous, and duplicates/zeros are rejected on
// construction.
class SparseTensor3 {
public:
    struct Entry {
        std::size_t i, j, k;
        double value;
    };

    SparseTensor3(std::size_t d1, std::size_t d2, std::size_t d3)
        : dims_{d1, d2, d3} {}

    static SparseTensor3 from_entries(std::size_t d1, std::size_t d2, std::size_t d3,
                                      std::vector<Entry> entries);

    // mode is 1-based (1..3).
    std::size_t dim(int mode) const { return dims_[static_cast<std::size_t>(mode - 1)]; }
    std::array<std::size_t, 3> dims() const { return dims_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

private:
    std::array<std::size_t, 3> dims_;
    std::vector<Entry> entries_;
};

// Tensor-vector contraction along one mode: the result is a dense matrix
// over the two surviving modes, kept in ascending mode order.
Matrix contract(const SparseTensor3& x, int mode, const Vector& u);

// Matrix-vector contraction along mode 1 (rows) or mode 2 (columns).
Vector contract(const Matrix& a, int mode, const Vector& u);

// Two contractions in sequence; the second mode index is shifted down by
// one when it comes after the first (the already-removed dimension no
// longer counts).
Vector contract_seq(const SparseTensor3& x, int m, const Vector& u, int n, const Vector& v);

// Sum of R rank-1 outer products lambda_r h_r (o) a_r (o) t_r, returned in
// coordinate form (dense content is fine at the sizes used here).
SparseTensor3 cp_reconstruct(const Matrix& h, const Matrix& a, const Matrix& t,
                             const Vector& lambdas);

double frob_norm(const SparseTensor3& x);
double frob_diff(const SparseTensor3& x, const SparseTensor3& y);

}  // namespace weblog
