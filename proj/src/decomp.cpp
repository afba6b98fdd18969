#include "weblog/decomp.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include <json.hpp>

namespace weblog {

namespace {

constexpr double kDenominatorFloor = 1e-12;
constexpr double kVanishedNorm = 1e-300;

// Subtracts the contribution of groups 0..l-1 from a raw update vector:
// out -= psi[r] * column_r(base) * s1(r) * s2(r), where s1/s2 are the
// projections of the other two iterates onto their factor columns.
void deflate(Vector& out, const Matrix& base, const Vector& psi, std::size_t l,
             const Vector& proj1, const Vector& proj2) {
    for (std::size_t r = 0; r < l; ++r) {
        double coef = psi[r] * proj1[r] * proj2[r];
        if (coef == 0.0) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] -= coef * base(i, r);
    }
}

// proj[r] = v . column_r(m) for r < l.
Vector projections(const Matrix& m, const Vector& v, std::size_t l) {
    Vector proj(l, 0.0);
    for (std::size_t r = 0; r < l; ++r) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * m(i, r);
        proj[r] = s;
    }
    return proj;
}

double frob_residual(const Matrix& c, const Matrix& u, const Matrix& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            double approx = 0.0;
            for (std::size_t r = 0; r < u.cols(); ++r) approx += u(i, r) * v(j, r);
            double d = c(i, j) - approx;
            s += d * d;
        }
    return std::sqrt(s);
}

// Uniform draw in (0, 1]; built directly on the generator output so trials
// are reproducible independent of the standard library.
double uniform_open_closed(std::mt19937& rng) {
    return (static_cast<double>(rng()) + 1.0) / 4294967296.0;
}

nlohmann::json matrix_columns(const Matrix& m) {
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t r = 0; r < m.cols(); ++r) cols.push_back(m.col(r));
    return cols;
}

Matrix matrix_from_columns(const nlohmann::json& cols, const char* what) {
    if (!cols.is_array() || cols.empty()) throw Error(std::string("factor file: bad ") + what);
    std::size_t rows = cols[0].size();
    Matrix m(rows, cols.size());
    for (std::size_t r = 0; r < cols.size(); ++r) {
        auto col = cols[r].get<std::vector<double>>();
        if (col.size() != rows) throw Error(std::string("factor file: ragged ") + what);
        m.set_col(r, col);
    }
    if (!all_finite(m)) throw Error(std::string("factor file: non-finite ") + what);
    return m;
}

}  // namespace

ParafacFactors greedy_parafac(const SparseTensor3& x, std::size_t rank, double epsilon,
                              std::size_t max_iters, std::ostream* diag) {
    if (rank < 1) throw InvalidRank("rank must be at least 1");
    if (epsilon <= 0.0) throw Error("epsilon must be positive");

    const std::size_t n1 = x.dim(1), n2 = x.dim(2), m = x.dim(3);
    ParafacFactors f;
    f.rank = rank;
    f.epsilon = epsilon;
    f.hub = Matrix(n1, rank);
    f.authority = Matrix(n2, rank);
    f.term = Matrix(m, rank);
    f.psi = Vector(rank, 0.0);

    for (std::size_t l = 0; l < rank; ++l) {
        Vector hx(n1, 1.0), ay(n2, 1.0), tz(m, 1.0);
        double delta = l2_norm(hx) * l2_norm(ay) * l2_norm(tz);
        bool converged = false, degenerate = false;
        std::size_t it = 0;

        while (it < max_iters) {
            ++it;
            double theta = delta;

            Vector raw = contract_seq(x, 2, ay, 3, tz);
            deflate(raw, f.hub, f.psi, l, projections(f.authority, ay, l),
                    projections(f.term, tz, l));
            double norm_x = l2_norm(raw);
            if (norm_x < kVanishedNorm) { degenerate = true; break; }
            for (std::size_t i = 0; i < n1; ++i) hx[i] = raw[i] / norm_x;

            raw = contract_seq(x, 1, hx, 3, tz);
            deflate(raw, f.authority, f.psi, l, projections(f.hub, hx, l),
                    projections(f.term, tz, l));
            double norm_y = l2_norm(raw);
            if (norm_y < kVanishedNorm) { degenerate = true; break; }
            for (std::size_t i = 0; i < n2; ++i) ay[i] = raw[i] / norm_y;

            raw = contract_seq(x, 1, hx, 2, ay);
            deflate(raw, f.term, f.psi, l, projections(f.hub, hx, l),
                    projections(f.authority, ay, l));
            double norm_z = l2_norm(raw);
            if (norm_z < kVanishedNorm) { degenerate = true; break; }
            for (std::size_t i = 0; i < m; ++i) tz[i] = raw[i] / norm_z;

            // With hub and authority already unit length, the raw term
            // norm is the current estimate of the group weight.
            delta = norm_z;
            if (std::abs(theta - delta) < epsilon) { converged = true; break; }
        }

        if (degenerate) {
            hx = normalize(Vector(n1, 1.0));
            ay = normalize(Vector(n2, 1.0));
            tz = normalize(Vector(m, 1.0));
            delta = 0.0;
        }
        f.hub.set_col(l, hx);
        f.authority.set_col(l, ay);
        f.term.set_col(l, tz);
        f.psi[l] = delta;
        f.iterations.push_back(it);
        f.converged.push_back(converged);
        f.degenerate.push_back(degenerate);
        if (diag)
            *diag << "group " << l << ": weight " << delta << ", " << it << " iterations"
                  << (converged ? "" : " (not converged)") << (degenerate ? " (degenerate)" : "")
                  << "\n";
    }

    for (std::size_t l = 1; l < rank; ++l) {
        if (f.psi[l] > f.psi[l - 1] && diag) {
            *diag << "warning: group weights are not non-increasing (psi[" << l - 1
                  << "]=" << f.psi[l - 1] << " < psi[" << l << "]=" << f.psi[l] << ")\n";
            break;
        }
    }
    return f;
}

Matrix ncw_normalize(const Matrix& c) {
    Vector row_sums(c.rows(), 0.0);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) row_sums[i] += c(i, j);

    Matrix out(c.rows(), c.cols());
    for (std::size_t j = 0; j < c.cols(); ++j) {
        double scale = 0.0;  // j-th entry of C^T C e
        for (std::size_t i = 0; i < c.rows(); ++i) scale += c(i, j) * row_sums[i];
        if (scale <= 0.0)
            throw ZeroColumn("column " + std::to_string(j) + " has no mass to normalize");
        double inv = 1.0 / std::sqrt(scale);
        for (std::size_t i = 0; i < c.rows(); ++i) out(i, j) = c(i, j) * inv;
    }
    return out;
}

NmfFactors nmf_multiplicative(const Matrix& cstar, std::size_t rank, std::size_t trials,
                              std::size_t max_iters, double tol) {
    if (rank < 1) throw InvalidRank("rank must be at least 1");
    if (trials < 1) throw Error("at least one trial is required");
    for (double v : cstar.data())
        if (v < 0.0) throw NegativeInput("matrix must be nonnegative");

    const std::size_t n = cstar.rows(), m = cstar.cols();
    NmfFactors best;
    bool have_best = false;

    for (unsigned seed = 1; seed <= trials; ++seed) {
        std::mt19937 rng(seed);
        Matrix u(n, rank), v(m, rank);
        for (double& val : u.data()) val = uniform_open_closed(rng);
        for (double& val : v.data()) val = uniform_open_closed(rng);

        std::vector<double> history{frob_residual(cstar, u, v)};
        std::size_t it = 0;
        while (it < max_iters) {
            ++it;
            // U <- U (.) (C V) (/) (U V^T V)
            Matrix gram_v = matmul(transpose(v), v);
            Matrix numer_u = matmul(cstar, v);
            Matrix denom_u = matmul(u, gram_v);
            for (std::size_t idx = 0; idx < u.data().size(); ++idx)
                u.data()[idx] *= numer_u.data()[idx] / (denom_u.data()[idx] + kDenominatorFloor);

            // V <- V (.) (C^T U) (/) (V U^T U)
            Matrix gram_u = matmul(transpose(u), u);
            Matrix numer_v = matmul(transpose(cstar), u);
            Matrix denom_v = matmul(v, gram_u);
            for (std::size_t idx = 0; idx < v.data().size(); ++idx)
                v.data()[idx] *= numer_v.data()[idx] / (denom_v.data()[idx] + kDenominatorFloor);

            double objective = frob_residual(cstar, u, v);
            double previous = history.back();
            history.push_back(objective);
            if (previous <= kDenominatorFloor) break;
            if ((previous - objective) / previous < tol) break;
        }

        double objective = history.back();
        if (!have_best || objective < best.objective) {
            best.u = std::move(u);
            best.v = std::move(v);
            best.objective = objective;
            best.trial_seed = seed;
            best.iterations = it;
            best.objective_history = std::move(history);
            have_best = true;
        }
    }
    return best;
}

std::string write_parafac(const ParafacFactors& f) {
    nlohmann::ordered_json j{
        {"kind", "parafac"},
        {"dims", {f.hub.rows(), f.authority.rows(), f.term.rows()}},
        {"rank", f.rank},
        {"epsilon", f.epsilon},
        {"hub", matrix_columns(f.hub)},
        {"authority", matrix_columns(f.authority)},
        {"term", matrix_columns(f.term)},
        {"psi", f.psi},
        {"iterations", f.iterations},
        {"converged", f.converged},
        {"degenerate", f.degenerate},
    };
    return j.dump(2) + "\n";
}

ParafacFactors read_parafac(std::string_view raw) {
    nlohmann::json j = nlohmann::json::parse(raw, nullptr, false);
    if (j.is_discarded() || j.value("kind", "") != "parafac")
        throw Error("factor file: not a parafac record");
    try {
        ParafacFactors f;
        f.rank = j.at("rank").get<std::size_t>();
        f.epsilon = j.at("epsilon").get<double>();
        f.hub = matrix_from_columns(j.at("hub"), "hub matrix");
        f.authority = matrix_from_columns(j.at("authority"), "authority matrix");
        f.term = matrix_from_columns(j.at("term"), "term matrix");
        f.psi = j.at("psi").get<Vector>();
        f.iterations = j.at("iterations").get<std::vector<std::size_t>>();
        f.converged = j.at("converged").get<std::vector<bool>>();
        f.degenerate = j.at("degenerate").get<std::vector<bool>>();
        if (f.hub.cols() != f.rank || f.authority.cols() != f.rank || f.term.cols() != f.rank ||
            f.psi.size() != f.rank)
            throw Error("factor file: rank does not match factor shapes");
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("factor file: ") + e.what());
    }
}

std::string write_nmf(const NmfFactors& f) {
    nlohmann::ordered_json j{
        {"kind", "nmf"},
        {"dims", {f.u.rows(), f.v.rows()}},
        {"rank", f.u.cols()},
        {"u", matrix_columns(f.u)},
        {"v", matrix_columns(f.v)},
        {"objective", f.objective},
        {"trial_seed", f.trial_seed},
        {"iterations", f.iterations},
    };
    return j.dump(2) + "\n";
}

NmfFactors read_nmf(std::string_view raw) {
    nlohmann::json j = nlohmann::json::parse(raw, nullptr, false);
    if (j.is_discarded() || j.value("kind", "") != "nmf")
        throw Error("factor file: not an nmf record");
    try {
        NmfFactors f;
        f.u = matrix_from_columns(j.at("u"), "u matrix");
        f.v = matrix_from_columns(j.at("v"), "v matrix");
        f.objective = j.at("objective").get<double>();
        f.trial_seed = j.at("trial_seed").get<unsigned>();
        f.iterations = j.at("iterations").get<std::size_t>();
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("factor file: ") + e.what());
    }
}

}  // namespace weblog
