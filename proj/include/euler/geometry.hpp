#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "euler/graph.hpp"
#include "euler/linalg.hpp"

namespace euler {

/// X = { x in [0,1]^V : x_u + x_v <= 1 on every edge }.
/// Y = { x in [0,1]^V : x_u <= x_v on every edge, u in part 1 }.
/// Both have volume E(G)/n!.
enum class Region { X, Y };

class Polytope {
public:
    explicit Polytope(BipartiteGraph graph, Region region = Region::X);

    const BipartiteGraph& graph() const { return graph_; }
    int dimension() const { return graph_.size(); }
    Region region() const { return region_; }
    bool contains(std::span<const double> point) const;

private:
    BipartiteGraph graph_;
    Region region_;
};

class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Accepted points, row-major with `dimension` coordinates each.
struct SampleSet {
    int dimension = 0;
    std::vector<double> coords;
    std::size_t candidates = 0;

    std::size_t size() const { return dimension == 0 ? 0 : coords.size() / dimension; }
    std::span<const double> point(std::size_t i) const { return {coords.data() + i * dimension, static_cast<std::size_t>(dimension)}; }
    double acceptance_rate() const { return candidates == 0 ? 0.0 : static_cast<double>(size()) / candidates; }
};

inline constexpr double kMinAcceptanceRate = 1e-4;

/// Uniform points in the polytope by rejection from the unit cube. The
/// generator is std::mt19937_64 seeded from (seed, stream), so distinct
/// streams of one seed are independent and each is reproducible. Throws
/// SamplingError once at least 10^5 candidates show an acceptance rate below
/// 10^-4.
SampleSet sample_polytope(const Polytope& p, std::size_t n_samples, std::uint64_t seed, std::uint64_t stream = 0);

struct VolumeEstimate {
    double estimate = 0.0;
    double std_error = 0.0;  // binomial standard error
};

/// Hit-or-miss estimate from n_samples cube points (n_samples >= 1000).
VolumeEstimate mc_volume(const Polytope& p, std::size_t n_samples, std::uint64_t seed, std::uint64_t stream = 1);

/// 1 iff x_v + y_v <= 1 for every v in S.
inline bool chi(VertexMask s, std::span<const double> x, std::span<const double> y) {
    for (VertexMask rest = s; rest; rest &= rest - 1) {
        const int v = __builtin_ctzll(rest);
        if (x[v] + y[v] > 1.0) return false;
    }
    return true;
}

struct NystromOptions {
    std::size_t volume_samples = std::size_t{1} << 20;
};

/// Plain Monte Carlo Nystrom discretisation of T[f](x) = int_X chi(x,y) f(y) dy:
/// matrix(i,j) = weight * chi(x_i, x_j) with equal weights vol(X)/N.
struct NystromOperator {
    BipartiteGraph graph;
    VertexMask s_set = 0;
    SampleSet nodes;
    VolumeEstimate volume;
    double weight = 0.0;
    SymMatrix matrix;
    std::uint64_t seed = 0;

    int size() const { return matrix.size(); }
};

/// Nodes come from stream 0 of `seed`, the volume from stream 1.
NystromOperator build_nystrom(const BipartiteGraph& g, VertexMask s, std::size_t n_nodes, std::uint64_t seed,
                              const NystromOptions& options = {});

struct SpectrumEntry {
    double lambda = 0.0;
    double c = 0.0;               // <phi,1>^2 / ||phi||^2
    std::vector<double> phi;      // eigenvector at the nodes, sum(phi) >= 0
    double std_error = 0.0;       // |lambda| * relative volume error
    int multiplicity = 1;         // computed eigenvalues within 1e-8
};

inline constexpr double kClusterTolerance = 1e-8;

/// Top-k eigenpairs by |lambda|, with quadrature inner products
/// <phi,1> = sum w phi_i and ||phi||^2 = sum w phi_i^2.
std::vector<SpectrumEntry> sym_eig(const NystromOperator& op, int k = 4);

/// sum_k c_k lambda_k^(m-1) over the supplied entries.
double spectral_series(std::span<const SpectrumEntry> spectrum, int m);

/// <1, T^(m-1) 1> with the Nystrom quadrature; approximates E(G x_S P_m)/(mn)!.
double nystrom_moment(const NystromOperator& op, int m);

struct PositivityReport {
    double lambda1 = 0.0;
    double lambda2_abs = 0.0;
    double gap_tolerance = 0.0;
    double min_phi = 0.0;  // min of phi_1 / max|phi_1| after sign normalisation
    bool lambda1_positive = false;
    bool simple = false;
    bool phi_positive = false;

    bool passed() const { return lambda1_positive && simple && phi_positive; }
};

inline constexpr double kPositivityEpsilon = 1e-2;

/// Numerical Krein-Rutman checks: lambda_1 > 0, lambda_1 - |lambda_2| beyond
/// 10 standard errors, and phi_1 >= -eps in sup-normalised scale.
PositivityReport positivity_checks(std::span<const SpectrumEntry> spectrum, double eps_pos = kPositivityEpsilon);

}  // namespace euler
