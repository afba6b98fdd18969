#include "weblog/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace weblog {

namespace {

bool coord_less(const SparseTensor3::Entry& a, const SparseTensor3::Entry& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

void check_mode(int mode) {
    if (mode < 1 || mode > 3)
        throw DimensionMismatch("contract: mode must be 1, 2 or 3");
}

}  // namespace

SparseTensor3 SparseTensor3::from_entries(std::size_t d1, std::size_t d2, std::size_t d3,
                                          std::vector<Entry> entries) {
    SparseTensor3 t(d1, d2, d3);
    std::erase_if(entries, [](const Entry& e) { return e.value == 0.0; });
    for (const Entry& e : entries) {
        if (e.i >= d1 || e.j >= d2 || e.k >= d3)
            throw DimensionMismatch("tensor entry out of range");
        if (!std::isfinite(e.value))
            throw Error("tensor entry is not finite");
    }
    std::sort(entries.begin(), entries.end(), coord_less);
    for (std::size_t n = 1; n < entries.size(); ++n) {
        const Entry& a = entries[n - 1];
        const Entry& b = entries[n];
        if (a.i == b.i && a.j == b.j && a.k == b.k)
            throw Error("duplicate tensor coordinate (" + std::to_string(a.i) + "," +
                        std::to_string(a.j) + "," + std::to_string(a.k) + ")");
    }
    t.entries_ = std::move(entries);
    return t;
}

Matrix contract(const SparseTensor3& x, int mode, const Vector& u) {
    check_mode(mode);
    if (u.size() != x.dim(mode))
        throw DimensionMismatch("contract: vector length does not match mode " +
                                std::to_string(mode));
    switch (mode) {
        case 1: {
            Matrix out(x.dim(2), x.dim(3), 0.0);
            for (const auto& e : x.entries()) out(e.j, e.k) += e.value * u[e.i];
            return out;
        }
        case 2: {
            Matrix out(x.dim(1), x.dim(3), 0.0);
            for (const auto& e : x.entries()) out(e.i, e.k) += e.value * u[e.j];
            return out;
        }
        default: {
            Matrix out(x.dim(1), x.dim(2), 0.0);
            for (const auto& e : x.entries()) out(e.i, e.j) += e.value * u[e.k];
            return out;
        }
    }
}

Vector contract(const Matrix& a, int mode, const Vector& u) {
    if (mode == 1) return tmatvec(a, u);
    if (mode == 2) return matvec(a, u);
    throw DimensionMismatch("contract: matrix mode must be 1 or 2");
}

Vector contract_seq(const SparseTensor3& x, int m, const Vector& u, int n, const Vector& v) {
    check_mode(m);
    check_mode(n);
    if (m == n) throw SameMode("contract_seq: modes must differ");
    Matrix mid = contract(x, m, u);
    return m > n ? contract(mid, n, v) : contract(mid, n - 1, v);
}

SparseTensor3 cp_reconstruct(const Matrix& h, const Matrix& a, const Matrix& t,
                             const Vector& lambdas) {
    const std::size_t r = lambdas.size();
    if (h.cols() != r || a.cols() != r || t.cols() != r)
        throw DimensionMismatch("cp_reconstruct: factor rank mismatch");
    std::vector<SparseTensor3::Entry> entries;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            for (std::size_t k = 0; k < t.rows(); ++k) {
                double s = 0.0;
                for (std::size_t g = 0; g < r; ++g) s += lambdas[g] * h(i, g) * a(j, g) * t(k, g);
                if (s != 0.0) entries.push_back({i, j, k, s});
            }
    return SparseTensor3::from_entries(h.rows(), a.rows(), t.rows(), std::move(entries));
}

double frob_norm(const SparseTensor3& x) {
    double s = 0.0;
    for (const auto& e : x.entries()) s += e.value * e.value;
    return std::sqrt(s);
}

double frob_diff(const SparseTensor3& x, const SparseTensor3& y) {
    if (x.dims() != y.dims()) throw DimensionMismatch("frob_diff: dims differ");
    const auto& a = x.entries();
    const auto& b = y.entries();
    double s = 0.0;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
        if (ib == b.size() || (ia < a.size() && coord_less(a[ia], b[ib]))) {
            s += a[ia].value * a[ia].value;
            ++ia;
        } else if (ia == a.size() || coord_less(b[ib], a[ia])) {
            s += b[ib].value * b[ib].value;
            ++ib;
        } else {
            double d = a[ia].value - b[ib].value;
            s += d * d;
            ++ia;
            ++ib;
        }
    }
    return std::sqrt(s);
}

}  // namespace weblog
