#include "euler/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "euler/parallel.hpp"

namespace euler {

SymMatrix::SymMatrix(int n, std::vector<double> data) : n_(n), a_(std::move(data)) {
    if (a_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("SymMatrix: data size does not match n*n");
}

bool SymMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double x : a_) sum += x * x;
    return std::sqrt(sum);
}

double SymMatrix::off_diagonal_norm() const {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) sum += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(sum);
}

void SymMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    parallel_for(static_cast<std::size_t>(n_), [&](std::size_t i) {
        const auto r = row(static_cast<int>(i));
        y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
    });
}

namespace {

void sort_by_modulus(EigenSystem& sys) {
    std::vector<std::size_t> order(sys.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(sys.values[a]) > std::abs(sys.values[b]);
    });
    EigenSystem sorted;
    sorted.iterations = sys.iterations;
    for (std::size_t i : order) {
        sorted.values.push_back(sys.values[i]);
        sorted.vectors.push_back(std::move(sys.vectors[i]));
    }
    sys = std::move(sorted);
}

}  // namespace

EigenSystem jacobi_eigen(SymMatrix a, double tol, int max_sweeps) {
    if (!a.is_symmetric()) throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");
    const int n = a.size();
    // v(r, k) holds component r of eigenvector k.
    SymMatrix v(n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    const double target = tol * std::max(1.0, a.frobenius_norm());
    int sweep = 0;
    while (a.off_diagonal_norm() > target) {
        if (sweep == max_sweeps) throw std::runtime_error("jacobi_eigen: no convergence");
        ++sweep;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = a(p, r) = c * arp - s * arq;
                    a(r, q) = a(q, r) = s * arp + c * arq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = c * vrp - s * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
        }
    }

    EigenSystem sys;
    sys.iterations = sweep;
    for (int k = 0; k < n; ++k) {
        sys.values.push_back(a(k, k));
        std::vector<double> vec(n);
        for (int r = 0; r < n; ++r) vec[r] = v(r, k);
        sys.vectors.push_back(std::move(vec));
    }
    sort_by_modulus(sys);
    return sys;
}

namespace {

// Columns of an n x p block stored column by column.
using Block = std::vector<std::vector<double>>;

// Gram-Schmidt (two passes). A column that collapses numerically is replaced
// by a fresh random direction, which keeps rank-deficient matrices workable.
void orthonormalise(Block& q, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    for (std::size_t c = 0; c < q.size(); ++c) {
        const double before = std::sqrt(std::inner_product(q[c].begin(), q[c].end(), q[c].begin(), 0.0));
        for (int attempt = 0;; ++attempt) {
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t prev = 0; prev < c; ++prev) {
                    const double proj = std::inner_product(q[c].begin(), q[c].end(), q[prev].begin(), 0.0);
                    for (std::size_t i = 0; i < q[c].size(); ++i) q[c][i] -= proj * q[prev][i];
                }
            }
            const double norm = std::sqrt(std::inner_product(q[c].begin(), q[c].end(), q[c].begin(), 0.0));
            if (norm > 1e-10 * before && norm > 1e-280) {
                for (double& x : q[c]) x /= norm;
                break;
            }
            if (attempt == 8) throw std::runtime_error("subspace iteration: cannot complete basis");
            for (double& x : q[c]) x = normal(rng);
        }
    }
}

Block apply_block(const SymMatrix& a, const Block& q) {
    const int n = a.size();
    const std::size_t p = q.size();
    Block z(p, std::vector<double>(n));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        const auto r = a.row(static_cast<int>(i));
        for (std::size_t c = 0; c < p; ++c)
            z[c][i] = std::inner_product(r.begin(), r.end(), q[c].begin(), 0.0);
    });
    return z;
}

Block combine(const Block& basis, const EigenSystem& ritz) {
    const std::size_t n = basis.front().size();
    Block out(ritz.vectors.size(), std::vector<double>(n, 0.0));
    for (std::size_t c = 0; c < ritz.vectors.size(); ++c)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const double w = ritz.vectors[c][j];
            for (std::size_t i = 0; i < n; ++i) out[c][i] += w * basis[j][i];
        }
    return out;
}

}  // namespace

EigenSystem top_eigenpairs(const SymMatrix& a, int k, std::uint64_t seed, double tol) {
    const int n = a.size();
    if (k < 1 || k > n) throw std::invalid_argument("top_eigenpairs: k out of range");
    if (n <= kDenseJacobiLimit) {
        EigenSystem sys = jacobi_eigen(a);
        sys.values.resize(k);
        sys.vectors.resize(k);
        return sys;
    }
    if (!a.is_symmetric()) throw std::invalid_argument("top_eigenpairs: matrix is not symmetric");

    const int p = std::min(n, std::max(2 * k, k + 12));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Block q(p, std::vector<double>(n));
    for (auto& col : q)
        for (double& x : col) x = normal(rng);
    orthonormalise(q, rng);

    constexpr int kMaxIterations = 5000;
    for (int it = 1; it <= kMaxIterations; ++it) {
        const Block z = apply_block(a, q);
        SymMatrix h(p);
        for (int i = 0; i < p; ++i)
            for (int j = i; j < p; ++j) {
                const double hij = 0.5 * (std::inner_product(q[i].begin(), q[i].end(), z[j].begin(), 0.0) +
                                          std::inner_product(q[j].begin(), q[j].end(), z[i].begin(), 0.0));
                h(i, j) = h(j, i) = hij;
            }
        const EigenSystem ritz = jacobi_eigen(h, 1e-14);
        Block x = combine(q, ritz);
        Block ax = combine(z, ritz);

        const double scale = std::abs(ritz.values.front());
        bool converged = true;
        for (int c = 0; c < k && converged; ++c) {
            double res = 0.0;
            for (int i = 0; i < n; ++i) {
                const double d = ax[c][i] - ritz.values[c] * x[c][i];
                res += d * d;
            }
            converged = std::sqrt(res) <= tol * scale;
        }
        if (converged || it == kMaxIterations) {
            if (!converged) throw std::runtime_error("top_eigenpairs: subspace iteration did not converge");
            EigenSystem out;
            out.iterations = it;
            for (int c = 0; c < k; ++c) {
                out.values.push_back(ritz.values[c]);
                out.vectors.push_back(std::move(x[c]));
            }
            return out;
        }
        orthonormalise(ax, rng);
        q = std::move(ax);
    }
    return {};
}

}  // namespace euler
