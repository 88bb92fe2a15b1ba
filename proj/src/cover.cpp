#include "ilab/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "ilab/error.hpp"
#include "ilab/fitter.hpp"
#include "ilab/incidence.hpp"

namespace ilab {

std::vector<MatchPair> greedy_matching(const IncidenceGraph& g) {
    const std::size_t n = g.vertex_count;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbor, edge)
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        if (a >= n || b >= n) throw ContractError("greedy_matching: edge endpoint out of range");
        if (a == b) throw ContractError("greedy_matching: self-loop");
        if (!seen.insert(std::minmax(a, b)).second) throw ContractError("greedy_matching: repeated edge");
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].empty()) throw ContractError("greedy_matching: isolated vertex " + std::to_string(v));
    }

    std::vector<MatchPair> out;
    std::vector<char> visited(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop();
            for (auto [w, e] : adj[u]) {
                if (visited[w]) continue;
                visited[w] = 1;
                out.push_back({w, e});
                queue.push(w);
            }
        }
    }
    return out;
}

namespace {

ChernoffBound chernoff(unsigned long n, const Rational& p, long divisor) {
    if (p < 0 || p > 1) throw ContractError("chernoff: p must lie in [0, 1]");
    ChernoffBound b;
    b.exponent = -Rational(n) * p / divisor;
    b.bound = std::exp(b.exponent.get_d());
    return b;
}

}  // namespace

ChernoffBound chernoff_upper(unsigned long n, const Rational& p) { return chernoff(n, p, 4); }
ChernoffBound chernoff_lower(unsigned long n, const Rational& p) { return chernoff(n, p, 8); }

PruneResult prune(const Scene& scene, const Rational& A) {
    const auto rep = all_incidences(scene);
    const std::size_t n = scene.lines.size();
    const std::size_t total = scene.size();

    std::vector<std::vector<std::size_t>> points_of(total);
    std::vector<std::size_t> live_lines(rep.points.size()), live_circles(rep.points.size());
    std::vector<char> point_alive(rep.points.size(), 1);
    for (std::size_t k = 0; k < rep.points.size(); ++k) {
        const auto& ip = rep.points[k];
        for (auto l : ip.lines) points_of[l].push_back(k);
        for (auto c : ip.circles) points_of[n + c].push_back(k);
        live_lines[k] = ip.lines.size();
        live_circles[k] = ip.circles.size();
    }
    std::vector<std::size_t> count(total);
    for (std::size_t i = 0; i < total; ++i) count[i] = rep.count_of(i);

    std::vector<char> alive(total, 1);
    auto remove = [&](std::size_t i) {
        alive[i] = 0;
        for (auto k : points_of[i]) {
            if (!point_alive[k]) continue;
            (i < n ? live_lines[k] : live_circles[k])--;
            if (live_lines[k] > 0 && live_circles[k] > 0) continue;
            point_alive[k] = 0;
            const auto& ip = rep.points[k];
            for (auto l : ip.lines) {
                if (alive[l]) --count[l];
            }
            for (auto c : ip.circles) {
                if (alive[n + c]) --count[n + c];
            }
        }
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < total; ++i) {
            if (alive[i] && Rational(static_cast<unsigned long>(count[i])) < A) {
                remove(i);
                changed = true;
            }
        }
    }

    PruneResult out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        out.kept_lines.push_back(i);
        out.scene.lines.push_back(scene.lines[i]);
    }
    for (std::size_t j = 0; j < scene.circles.size(); ++j) {
        if (!alive[n + j]) continue;
        out.kept_circles.push_back(j);
        out.scene.circles.push_back(scene.circles[j]);
    }
    return out;
}

namespace {

bool bernoulli(std::mt19937_64& rng, double p) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

}  // namespace

RoundResult sample_round(const Scene& scene, unsigned D, std::mt19937_64& rng, std::size_t retry_cap) {
    if (scene.empty()) throw ContractError("sample_round: empty scene");
    if (D == 0) throw ContractError("sample_round: D must be >= 1");
    const std::size_t n = scene.lines.size(), m = scene.circles.size();
    const bool use_lines = n > 0 && (m == 0 || n <= m);
    const std::size_t k = use_lines ? n : m;
    const std::size_t offset = use_lines ? 0 : n;

    RoundResult res;
    res.sampled_lines = use_lines;
    res.p = Rational(Rational(static_cast<unsigned long>(D) * D) / (25 * static_cast<unsigned long>(k)));
    if (res.p > 1) res.p = 1;
    const bool take_all = res.p >= 1;
    const double pd = res.p.get_d();

    std::size_t last_size = 0;
    for (std::size_t attempt = 0; attempt <= retry_cap; ++attempt) {
        std::vector<CurveRef> sample;
        for (std::size_t i = 0; i < k; ++i) {
            if (take_all || bernoulli(rng, pd)) sample.push_back(curve_at(scene, offset + i));
        }
        last_size = sample.size();
        if (sample.empty()) continue;
        const unsigned cap = std::min(D, std::max(1u, trivial_degree_bound(sample.size())));
        auto fit = min_degree_surface_capped(sample, cap);
        if (!fit) continue;
        res.surface = std::move(fit->surface);
        res.degree = fit->degree;
        res.sample_size = sample.size();
        res.retries = attempt;
        res.contained = contained_curves(res.surface, scene);
        if (res.contained.empty()) throw AlgorithmError("sample_round: fitted surface absorbs no curve");
        return res;
    }
    std::ostringstream msg;
    msg << "sample_round: no admissible sample after " << retry_cap << " retries (D = " << D
        << ", p = " << to_string(res.p) << ", last sample size = " << last_size << ", sampled "
        << (use_lines ? "lines" : "circles") << ")";
    throw AlgorithmError(msg.str());
}

RoundResult sample_round(const Scene& scene, unsigned D, std::uint64_t seed, std::size_t retry_cap) {
    std::mt19937_64 rng(seed);
    return sample_round(scene, D, rng, retry_cap);
}

unsigned round_degree(std::size_t k, const Rational& A) {
    if (A <= 0) throw ContractError("round_degree: A must be positive");
    const Integer d = ceil_of(Rational(200 * static_cast<unsigned long>(k)) / A);
    if (d < 1) return 1;
    if (!d.fits_uint_p()) return std::numeric_limits<unsigned>::max();
    return static_cast<unsigned>(d.get_ui());
}

CoverResult cover_collections(const Scene& scene, const CoverOptions& opt) {
    if (opt.A <= 0) throw ContractError("cover_collections: A must be positive");
    const std::size_t n = scene.lines.size(), m = scene.circles.size();

    CoverResult out;
    out.seed = opt.seed;
    out.degree_budget = Rational(500 * static_cast<unsigned long>(std::min(n, m))) / opt.A;
    out.assignment.assign(scene.size(), 0);
    if (scene.empty()) return out;

    const auto rep = all_incidences(scene);
    for (std::size_t i = 0; i < scene.size(); ++i) {
        if (Rational(static_cast<unsigned long>(rep.count_of(i))) < opt.A) {
            throw ContractError("cover_collections: curve " + std::to_string(i) +
                                " has fewer than A points of P (prune first)");
        }
    }

    std::mt19937_64 rng(opt.seed);
    std::vector<std::size_t> residual(scene.size());
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = i;

    while (!residual.empty()) {
        if (out.rounds == opt.max_rounds) {
            throw AlgorithmError("cover_collections: round limit reached with " + std::to_string(residual.size()) +
                                 " curves left");
        }
        Scene sub;
        for (auto g : residual) {
            if (g < n) {
                sub.lines.push_back(scene.lines[g]);
            } else {
                sub.circles.push_back(scene.circles[g - n]);
            }
        }
        const std::size_t rn = sub.lines.size(), rm = sub.circles.size();
        const std::size_t k = (rn == 0 || rm == 0) ? std::max(rn, rm) : std::min(rn, rm);
        const unsigned D = round_degree(k, opt.A);
        const auto round = sample_round(sub, D, rng, opt.retry_cap);

        CoverRoundInfo info{rn, rm, D, round.p, round.sampled_lines, round.sample_size, round.retries,
                            round.degree, round.contained.size()};
        std::vector<char> absorbed(residual.size(), 0);
        for (auto local : round.contained) {
            absorbed[local] = 1;
            out.assignment[residual[local]] = out.factors.size();
        }
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < residual.size(); ++i) {
            if (!absorbed[i]) next.push_back(residual[i]);
        }
        residual = std::move(next);
        out.total_degree += round.degree;
        out.factors.push_back(round.surface);
        out.round_info.push_back(std::move(info));
        ++out.rounds;
    }

    for (std::size_t i = 0; i < scene.size(); ++i) {
        if (!contains(out.factors[out.assignment[i]], curve_at(scene, i))) {
            throw AlgorithmError("cover_collections: curve " + std::to_string(i) + " is not on its assigned factor");
        }
    }
    return out;
}

}  // namespace ilab
