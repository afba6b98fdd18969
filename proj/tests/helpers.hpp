#pragma once

#include <random>
#include <vector>

#include "weblog/matrix.hpp"
#include "weblog/tensor.hpp"

namespace testutil {

// Dense 3-way array used as the independent reference for every sparse
// contraction path.
struct Dense3 {
    std::size_t d1, d2, d3;
    std::vector<double> v;

    Dense3(std::size_t a, std::size_t b, std::size_t c) : d1(a), d2(b), d3(c), v(a * b * c, 0.0) {}

    double& at(std::size_t i, std::size_t j, std::size_t k) { return v[(i * d2 + j) * d3 + k]; }
    double at(std::size_t i, std::size_t j, std::size_t k) const {
        return v[(i * d2 + j) * d3 + k];
    }

    static Dense3 from(const weblog::SparseTensor3& x) {
        Dense3 d(x.dim(1), x.dim(2), x.dim(3));
        for (const auto& e : x.entries()) d.at(e.i, e.j, e.k) = e.value;
        return d;
    }
};

inline weblog::Vector random_vector(std::mt19937& rng, std::size_t n, double lo = -2.0,
                                    double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    weblog::Vector v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

inline weblog::SparseTensor3 random_sparse(std::mt19937& rng, std::size_t d1, std::size_t d2,
                                           std::size_t d3, double density = 0.3, double lo = -2.0,
                                           double hi = 2.0) {
    std::uniform_real_distribution<double> value(lo, hi);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<weblog::SparseTensor3::Entry> entries;
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            for (std::size_t k = 0; k < d3; ++k)
                if (coin(rng) < density) {
                    double val = value(rng);
                    if (val != 0.0) entries.push_back({i, j, k, val});
                }
    return weblog::SparseTensor3::from_entries(d1, d2, d3, std::move(entries));
}

// Triple-loop reference for a single-mode contraction.
inline weblog::Matrix oracle_contract(const Dense3& x, int mode, const weblog::Vector& u) {
    using weblog::Matrix;
    if (mode == 1) {
        Matrix out(x.d2, x.d3, 0.0);
        for (std::size_t i = 0; i < x.d1; ++i)
            for (std::size_t j = 0; j < x.d2; ++j)
                for (std::size_t k = 0; k < x.d3; ++k) out(j, k) += x.at(i, j, k) * u[i];
        return out;
    }
    if (mode == 2) {
        Matrix out(x.d1, x.d3, 0.0);
        for (std::size_t i = 0; i < x.d1; ++i)
            for (std::size_t j = 0; j < x.d2; ++j)
                for (std::size_t k = 0; k < x.d3; ++k) out(i, k) += x.at(i, j, k) * u[j];
        return out;
    }
    Matrix out(x.d1, x.d2, 0.0);
    for (std::size_t i = 0; i < x.d1; ++i)
        for (std::size_t j = 0; j < x.d2; ++j)
            for (std::size_t k = 0; k < x.d3; ++k) out(i, j) += x.at(i, j, k) * u[k];
    return out;
}

// Direct double-sum reference for contracting two modes at once.
inline weblog::Vector oracle_contract_pair(const Dense3& x, int m, const weblog::Vector& u, int n,
                                           const weblog::Vector& v) {
    // weight per original mode: contracted modes take their vector entry,
    // the surviving mode keeps the running index.
    auto weight = [&](int mode, std::size_t i1, std::size_t i2, std::size_t i3) -> double {
        std::size_t idx = mode == 1 ? i1 : mode == 2 ? i2 : i3;
        if (mode == m) return u[idx];
        if (mode == n) return v[idx];
        return 1.0;
    };
    int survivor = 6 - m - n;
    std::size_t out_len = survivor == 1 ? x.d1 : survivor == 2 ? x.d2 : x.d3;
    weblog::Vector out(out_len, 0.0);
    for (std::size_t i = 0; i < x.d1; ++i)
        for (std::size_t j = 0; j < x.d2; ++j)
            for (std::size_t k = 0; k < x.d3; ++k) {
                std::size_t pos = survivor == 1 ? i : survivor == 2 ? j : k;
                out[pos] += x.at(i, j, k) * weight(1, i, j, k) * weight(2, i, j, k) *
                            weight(3, i, j, k);
            }
    // the surviving mode keeps its own weight of 1; contracted weights
    // already applied above
    return out;
}

inline double max_abs_diff(const weblog::Matrix& a, const weblog::Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            double d = std::abs(a(i, j) - b(i, j));
            if (d > worst) worst = d;
        }
    return worst;
}

inline double max_abs_diff(const weblog::Vector& a, const weblog::Vector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = std::abs(a[i] - b[i]);
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace testutil
