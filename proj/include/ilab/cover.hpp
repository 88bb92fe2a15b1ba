#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ilab/geom.hpp"
#include "ilab/poly.hpp"

namespace ilab {

/// Simple undirected graph on vertices 0..vertex_count-1.
struct IncidenceGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct MatchPair {
    std::size_t vertex;
    std::size_t edge;  // index into IncidenceGraph::edges
};

/// Matches every non-root vertex of a BFS forest (roots: smallest vertex of
/// each component) to the tree edge toward its parent. Throws ContractError on
/// isolated vertices, self-loops, repeated edges or out-of-range endpoints.
std::vector<MatchPair> greedy_matching(const IncidenceGraph& g);

/// Tail bound exp(exponent) with the exponent kept exact.
struct ChernoffBound {
    Rational exponent;
    double bound = 1.0;
};

/// exp(-np/4) for the upper tail and exp(-np/8) for the lower tail.
/// Throws ContractError unless 0 <= p <= 1.
ChernoffBound chernoff_upper(unsigned long n, const Rational& p);
ChernoffBound chernoff_lower(unsigned long n, const Rational& p);

struct PruneResult {
    Scene scene;
    std::vector<std::size_t> kept_lines;    // indices into the input lines
    std::vector<std::size_t> kept_circles;  // indices into the input circles
};

/// Removes curves with fewer than A points of P until none is left. Passes
/// scan curves in ascending global index; the surviving set does not depend
/// on the order.
PruneResult prune(const Scene& scene, const Rational& A);

struct RoundResult {
    MultiPoly surface;
    unsigned degree = 0;
    std::vector<std::size_t> contained;  // global indices into the round's scene
    Rational p;
    bool sampled_lines = true;
    std::size_t sample_size = 0;
    std::size_t retries = 0;  // rejected samples before the accepted one
};

/// One sampling round on the whole scene: Bernoulli(p) sample of the smaller
/// collection, p = min(1, D^2 / (25 k)), then a fitted surface of degree <= D
/// and absorption of every contained curve. When one collection is empty the
/// other one is sampled. A sample is rejected (and redrawn) when it is empty
/// or admits no surface of degree <= D. Throws
/// AlgorithmError after retry_cap rejections, ContractError on an empty scene
/// or D == 0.
RoundResult sample_round(const Scene& scene, unsigned D, std::mt19937_64& rng, std::size_t retry_cap = 20);
RoundResult sample_round(const Scene& scene, unsigned D, std::uint64_t seed, std::size_t retry_cap = 20);

struct CoverOptions {
    Rational A{1};
    std::uint64_t seed = 1;
    std::size_t max_rounds = 1000;
    std::size_t retry_cap = 20;
};

struct CoverRoundInfo {
    std::size_t residual_lines = 0;
    std::size_t residual_circles = 0;
    unsigned D = 0;
    Rational p;
    bool sampled_lines = true;
    std::size_t sample_size = 0;
    std::size_t retries = 0;
    unsigned degree = 0;
    std::size_t absorbed = 0;
};

struct CoverResult {
    std::vector<MultiPoly> factors;
    std::vector<std::size_t> assignment;  // per global curve index
    unsigned long total_degree = 0;
    std::size_t rounds = 0;
    std::uint64_t seed = 0;
    Rational degree_budget;  // 500 min(n, m) / A
    std::vector<CoverRoundInfo> round_info;
};

/// Round degree for a residual of k sampled-side curves: max(1, ceil(200 k / A)).
unsigned round_degree(std::size_t k, const Rational& A);

/// Covers the scene by per-round surfaces until nothing is left. Requires
/// every curve to carry >= A points of P (ContractError otherwise) and A > 0.
/// Each curve is re-checked exactly against its assigned factor.
CoverResult cover_collections(const Scene& scene, const CoverOptions& opt);

}  // namespace ilab
