#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "weblog/matrix.hpp"
#include "weblog/tensor.hpp"

namespace weblog {

class InvalidRank : public Error {
public:
    using Error::Error;
};

class NegativeInput : public Error {
public:
    using Error::Error;
};

class ZeroColumn : public Error {
public:
    using Error::Error;
};

// Rank-R decomposition of an N1 x N2 x M tensor into hub, authority and
// term matrices with per-group weights. Factor columns have unit L2 norm;
// the weights live in psi.
struct ParafacFactors {
    Matrix hub;        // N1 x R
    Matrix authority;  // N2 x R
    Matrix term;       // M x R
    Vector psi;        // R group weights
    std::size_t rank = 0;
    double epsilon = 0.0;
    std::vector<std::size_t> iterations;  // per group
    std::vector<bool> converged;          // per group
    std::vector<bool> degenerate;         // per group (vanished update)
};

struct NmfFactors {
    Matrix u;  // N x R, nonnegative
    Matrix v;  // M x R, nonnegative
    double objective = 0.0;       // final ||C - U V^T||_F of the winning trial
    unsigned trial_seed = 0;      // seed of the winning trial
    std::size_t iterations = 0;   // iterations the winning trial ran
    std::vector<double> objective_history;  // winning trial, includes start
};

// Greedy rank-1 deflation: each group runs a power iteration on the tensor
// with all previously extracted groups subtracted inside the update. The
// group weight is the norm of the raw term update once the hub and
// authority iterates are unit vectors; iteration stops when the weight
// estimate changes by less than epsilon. Hitting max_iters is not an
// error; the group is recorded with converged=false. A vanishing update
// (zero tensor or fully deflated residual) yields weight 0 and a
// flagged degenerate group.
ParafacFactors greedy_parafac(const SparseTensor3& x, std::size_t rank, double epsilon = 1e-9,
                              std::size_t max_iters = 500, std::ostream* diag = nullptr);

// Column scaling C diag(C^T C e)^{-1/2}: column j is divided by the square
// root of sum_i C(i,j) * rowsum_i. Throws ZeroColumn on an all-zero column.
Matrix ncw_normalize(const Matrix& c);

// Multiplicative-update factorization C ~ U V^T with `trials` restarts
// from seeds 1..trials; the trial with the lowest final Frobenius
// objective wins (ties keep the lower seed). Denominators carry a 1e-12
// floor so degenerate inputs cannot produce NaN.
NmfFactors nmf_multiplicative(const Matrix& cstar, std::size_t rank, std::size_t trials = 10,
                              std::size_t max_iters = 300, double tol = 1e-6);

std::string write_parafac(const ParafacFactors& f);
ParafacFactors read_parafac(std::string_view raw);
std::string write_nmf(const NmfFactors& f);
NmfFactors read_nmf(std::string_view raw);

}  // namespace weblog
