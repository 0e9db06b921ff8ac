#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace euler {

/// Dense square matrix stored row-major in full. "Symmetric" is a runtime
/// property checked by the eigensolvers, not enforced on writes.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
    SymMatrix(int n, std::vector<double> data);

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    std::span<const double> row(int i) const { return {a_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)}; }
    std::span<const double> data() const { return a_; }

    /// Bit-exact symmetry.
    bool is_symmetric() const;
    double frobenius_norm() const;
    double off_diagonal_norm() const;

    /// y = A x
    void multiply(std::span<const double> x, std::span<double> y) const;

private:
    int n_ = 0;
    std::vector<double> a_;
};

/// Eigenpairs sorted by |value| descending; vectors[k] has unit 2-norm.
struct EigenSystem {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
    int iterations = 0;  // Jacobi sweeps or subspace iterations
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// tol * max(1, ||A||_F). Throws std::invalid_argument for a non-symmetric
/// matrix and std::runtime_error if max_sweeps is reached first.
EigenSystem jacobi_eigen(SymMatrix a, double tol = 1e-12, int max_sweeps = 100);

/// The k eigenpairs of largest modulus. Small matrices go straight to
/// jacobi_eigen; larger ones use block subspace iteration with a
/// Rayleigh-Ritz step solved by jacobi_eigen, stopping once every wanted
/// Ritz residual is below tol * |lambda_1|.
EigenSystem top_eigenpairs(const SymMatrix& a, int k, std::uint64_t seed = 0, double tol = 1e-10);

inline constexpr int kDenseJacobiLimit = 320;

}  // namespace euler
