#include "euler/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "euler/parallel.hpp"

namespace euler {

Polytope::Polytope(BipartiteGraph graph, Region region) : graph_(std::move(graph)), region_(region) {
    if (region_ == Region::Y && !graph_.is_bipartite())
        throw std::invalid_argument("the region Y needs a bipartite graph");
}

bool Polytope::contains(std::span<const double> x) const {
    for (double xi : x)
        if (xi < 0.0 || xi > 1.0) return false;
    for (const Edge& e : graph_.edges()) {
        if (region_ == Region::X) {
            if (x[e.u] + x[e.v] > 1.0) return false;
        } else {
            const auto [lo, hi] = graph_.part(e.u) == 1 ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
            if (x[lo] > x[hi]) return false;
        }
    }
    return true;
}

namespace {

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

constexpr std::size_t kAcceptanceCheckpoint = 100000;

}  // namespace

SampleSet sample_polytope(const Polytope& p, std::size_t n_samples, std::uint64_t seed, std::uint64_t stream) {
    if (n_samples < 1) throw std::invalid_argument("sample_polytope: need at least one sample");
    auto rng = make_stream(seed, stream);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SampleSet set;
    set.dimension = p.dimension();
    set.coords.reserve(n_samples * set.dimension);
    std::vector<double> candidate(set.dimension);
    std::size_t accepted = 0;
    while (accepted < n_samples) {
        for (double& x : candidate) x = unit(rng);
        ++set.candidates;
        if (p.contains(candidate)) {
            set.coords.insert(set.coords.end(), candidate.begin(), candidate.end());
            ++accepted;
        }
        if (set.candidates % kAcceptanceCheckpoint == 0 &&
            static_cast<double>(accepted) / set.candidates < kMinAcceptanceRate)
            throw SamplingError("acceptance rate below 1e-4; dimension too high for rejection sampling");
    }
    return set;
}

VolumeEstimate mc_volume(const Polytope& p, std::size_t n_samples, std::uint64_t seed, std::uint64_t stream) {
    if (n_samples < 1000) throw std::invalid_argument("mc_volume: need at least 1000 samples");
    auto rng = make_stream(seed, stream);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> candidate(p.dimension());
    std::size_t inside = 0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        for (double& x : candidate) x = unit(rng);
        if (p.contains(candidate)) ++inside;
    }
    const double frac = static_cast<double>(inside) / n_samples;
    return {frac, std::sqrt(frac * (1.0 - frac) / n_samples)};
}

NystromOperator build_nystrom(const BipartiteGraph& g, VertexMask s, std::size_t n_nodes, std::uint64_t seed,
                              const NystromOptions& options) {
    if ((s & ~g.all_vertices()) != 0) throw std::invalid_argument("S is not a subset of the vertices");
    const Polytope x(g);
    NystromOperator op;
    op.graph = g;
    op.s_set = s;
    op.seed = seed;
    op.nodes = sample_polytope(x, n_nodes, seed, 0);
    op.volume = mc_volume(x, options.volume_samples, seed, 1);
    op.weight = op.volume.estimate / static_cast<double>(n_nodes);

    const int n = static_cast<int>(n_nodes);
    std::vector<double> data(static_cast<std::size_t>(n) * n);
    parallel_for(n_nodes, [&](std::size_t i) {
        const auto xi = op.nodes.point(i);
        for (std::size_t j = 0; j < n_nodes; ++j)
            data[i * n_nodes + j] = chi(s, xi, op.nodes.point(j)) ? op.weight : 0.0;
    });
    op.matrix = SymMatrix(n, std::move(data));
    // chi is symmetric bit-for-bit, so (M + M^T)/2 would change nothing.
    if (!op.matrix.is_symmetric()) throw std::logic_error("Nystrom matrix is not symmetric");
    return op;
}

std::vector<SpectrumEntry> sym_eig(const NystromOperator& op, int k) {
    const EigenSystem sys = top_eigenpairs(op.matrix, k, op.seed);
    const double rel_err = op.volume.estimate > 0 ? op.volume.std_error / op.volume.estimate : 0.0;
    std::vector<SpectrumEntry> out;
    for (int i = 0; i < k; ++i) {
        SpectrumEntry e;
        e.lambda = sys.values[i];
        e.phi = sys.vectors[i];
        const double sum = std::accumulate(e.phi.begin(), e.phi.end(), 0.0);
        if (sum < 0)
            for (double& v : e.phi) v = -v;
        double inner = 0.0;
        double norm2 = 0.0;
        for (double v : e.phi) {
            inner += op.weight * v;
            norm2 += op.weight * v * v;
        }
        e.c = norm2 > 0 ? inner * inner / norm2 : 0.0;
        e.std_error = std::abs(e.lambda) * rel_err;
        out.push_back(std::move(e));
    }
    for (auto& e : out)
        e.multiplicity = static_cast<int>(std::count_if(out.begin(), out.end(), [&](const SpectrumEntry& o) {
            return std::abs(o.lambda - e.lambda) <= kClusterTolerance;
        }));
    return out;
}

double spectral_series(std::span<const SpectrumEntry> spectrum, int m) {
    if (spectrum.empty()) throw std::invalid_argument("spectral_series: empty spectrum");
    if (m < 1) throw std::invalid_argument("spectral_series: m must be >= 1");
    double sum = 0.0;
    for (const auto& e : spectrum) sum += e.c * std::pow(e.lambda, m - 1);
    return sum;
}

double nystrom_moment(const NystromOperator& op, int m) {
    if (m < 1) throw std::invalid_argument("nystrom_moment: m must be >= 1");
    std::vector<double> v(op.size(), 1.0);
    std::vector<double> next(op.size());
    for (int i = 1; i < m; ++i) {
        op.matrix.multiply(v, next);
        v.swap(next);
    }
    return op.weight * std::accumulate(v.begin(), v.end(), 0.0);
}

PositivityReport positivity_checks(std::span<const SpectrumEntry> spectrum, double eps_pos) {
    if (spectrum.size() < 2) throw std::invalid_argument("positivity_checks: need two eigenpairs");
    PositivityReport r;
    const auto& first = spectrum[0];
    r.lambda1 = first.lambda;
    r.lambda2_abs = std::abs(spectrum[1].lambda);
    r.gap_tolerance = 10.0 * first.std_error;
    r.lambda1_positive = first.lambda > 0;
    r.simple = first.lambda - r.lambda2_abs > r.gap_tolerance && first.multiplicity == 1;
    double sup = 0.0;
    for (double v : first.phi) sup = std::max(sup, std::abs(v));
    const auto [lo, hi] = std::minmax_element(first.phi.begin(), first.phi.end());
    // Orient so the dominant sign is positive.
    const double sign = std::abs(*hi) >= std::abs(*lo) ? 1.0 : -1.0;
    r.min_phi = sup > 0 ? std::min(sign * *lo, sign * *hi) / sup : 0.0;
    r.phi_positive = r.min_phi >= -eps_pos;
    return r;
}

}  // namespace euler
