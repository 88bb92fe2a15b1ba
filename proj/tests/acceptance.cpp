// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "ilab/cover.hpp"
#include "ilab/detect.hpp"
#include "ilab/fitter.hpp"
#include "ilab/gen.hpp"
#include "ilab/incidence.hpp"
#include "support.hpp"

using namespace ilab;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome hyperboloid_construction() {
    const auto start = std::chrono::steady_clock::now();
    const Scene s = gen_hyperboloid(10, 10);
    const auto rep = all_incidences(s);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (rep.total_points() != 100) return fail("|P| = " + std::to_string(rep.total_points()));
    std::set<Point3, Point3Less> uniq;
    for (const auto& ip : rep.points) {
        uniq.insert(ip.point);
        if (ip.lines.size() != 1 || ip.circles.size() != 1) return fail("point with extra membership");
        if (!on_line(ip.point, s.lines[ip.lines[0]]) || !on_circle(ip.point, s.circles[ip.circles[0]])) {
            return fail("point off its curves");
        }
    }
    if (uniq.size() != 100) return fail("duplicate points");
    if (secs >= 1.0) return fail("runtime " + std::to_string(secs) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "|P| = 100, %.3f s", secs);
    return {true, buf};
}

Outcome structure_recovery() {
    const auto fams = find_structured_families(gen_hyperboloid(10, 10), {5, 1});
    if (fams.size() != 1) return fail(std::to_string(fams.size()) + " families");
    if (fams[0].kind != QuadricKind::hyperboloid_one_sheet) return fail(std::string(to_string(fams[0].kind)));
    if (fams[0].members.size() != 20) return fail(std::to_string(fams[0].members.size()) + " members");
    if (!proportional(fams[0].surface, hyperboloid_poly())) return fail("surface " + fams[0].surface.to_string());
    return {true, "1 family, 20 members, " + fams[0].surface.to_string()};
}

Scene random_structured_scene(std::mt19937_64& rng) {
    Scene s;
    const std::size_t pieces = 1 + rng() % 2;
    for (std::size_t k = 0; k < pieces; ++k) {
        Scene piece = rng() % 2 == 0 ? gen_hyperboloid(rng() % 5, rng() % 4) : gen_planar(rng() % 4, rng() % 4);
        piece = rotate(piece, {static_cast<long>(rng() % 4) + 1, static_cast<long>(rng() % 5) - 2,
                               static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2});
        piece = translate(piece, random_vec(rng, 6, 1));
        s = merge(s, piece);
    }
    if (s.empty()) s = gen_hyperboloid(1, 1);
    return s;
}

Outcome minimal_degree() {
    Scene s = gen_hyperboloid(5, 5);
    const auto refs = curve_refs(s);
    const auto fit = min_degree_surface(refs);
    if (fit.degree != 2 || fit.kernel_dim != 1) {
        return fail("degree " + std::to_string(fit.degree) + ", kernel " + std::to_string(fit.kernel_dim));
    }
    if (!nullspace(assemble_constraints(refs, 1), 4).empty()) return fail("a plane contains the configuration");
    std::mt19937_64 rng(2024);
    unsigned max_degree = 0;
    for (int i = 0; i < 100; ++i) {
        const Scene r = random_structured_scene(rng);
        const auto f = min_degree_surface(curve_refs(r));
        const unsigned bound = trivial_degree_bound(r.size());
        if (f.degree > bound) return fail("degree " + std::to_string(f.degree) + " > " + std::to_string(bound));
        max_degree = std::max(max_degree, f.degree);
    }
    return {true, "degree 2, kernel 1, max degree over 100 scenes " + std::to_string(max_degree)};
}

Outcome covering() {
    const Scene h1 = gen_hyperboloid(10, 10);
    const Scene h2 = translate(scale(gen_hyperboloid(10, 10), 2), {20, 0, 0});
    const Scene pl = translate(gen_planar(10, 10), {0, 0, 100});
    const Scene s = merge(merge(h1, h2), pl);
    CoverOptions opt;
    opt.A = 10;
    opt.seed = 2718;
    const auto res = cover_collections(s, opt);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!contains(res.factors[res.assignment[i]], curve_at(s, i))) return fail("curve off its factor");
    }
    if (res.total_degree > 6) return fail("total degree " + std::to_string(res.total_degree));
    return {true, "30+30 curves, " + std::to_string(res.rounds) + " round(s), total degree " +
                      std::to_string(res.total_degree) + " vs budget " + to_string(res.degree_budget)};
}

Outcome complex_counterexample() {
    const auto grid = distinct_params(10);
    const auto rep = complex_quartic_check(grid, grid);
    if (!rep.ok()) return fail("failures reported");
    if (rep.verified_intersections != 100 || rep.points_checked != 100) return fail("counts off");
    return {true, "100 intersections, " + std::to_string(rep.distinct_points) + " distinct points, 0 failures"};
}

Outcome greedy_matching_size() {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        IncidenceGraph g;
        g.vertex_count = 2 + rng() % 199;
        std::set<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t v = 0; v < g.vertex_count; ++v) {
            std::size_t w = rng() % g.vertex_count;
            if (w == v) w = (v + 1) % g.vertex_count;
            edges.insert(std::minmax(v, w));
        }
        const std::size_t extra = rng() % (2 * g.vertex_count);
        for (std::size_t i = 0; i < extra; ++i) {
            const std::size_t a = rng() % g.vertex_count, b = rng() % g.vertex_count;
            if (a != b) edges.insert(std::minmax(a, b));
        }
        g.edges.assign(edges.begin(), edges.end());
        const auto m = greedy_matching(g);
        std::set<std::size_t> used;
        for (const auto& [v, e] : m) {
            if (g.edges[e].first != v && g.edges[e].second != v) return fail("vertex not on its edge");
            if (!used.insert(e).second) return fail("edge matched twice");
        }
        if (2 * m.size() < g.vertex_count) return fail("matching too small");
    }
    return {true, "1000 graphs, 0 violations"};
}

Outcome chernoff_regime() {
    const unsigned long n = 400;
    const Rational p = rational(1, 4);
    const int trials = 10000;
    std::mt19937_64 rng(314159);
    std::bernoulli_distribution coin(0.25);
    int upper = 0, lower = 0;
    for (int t = 0; t < trials; ++t) {
        unsigned long sum = 0;
        for (unsigned long i = 0; i < n; ++i) sum += coin(rng) ? 1 : 0;
        if (sum >= 200) ++upper;  // mean >= 2p
        if (sum <= 50) ++lower;   // mean <= p/2
    }
    const auto up = chernoff_upper(n, p), lo = chernoff_lower(n, p);
    auto slack = [&](double b) { return 3.0 * std::sqrt(std::max(b * (1 - b), 1.0 / trials) / trials); };
    const double fu = static_cast<double>(upper) / trials, fl = static_cast<double>(lower) / trials;
    if (fu > up.bound + slack(up.bound)) return fail("upper tail frequency " + std::to_string(fu));
    if (fl > lo.bound + slack(lo.bound)) return fail("lower tail frequency " + std::to_string(fl));
    char buf[160];
    std::snprintf(buf, sizeof buf, "upper %.2g <= e^%s, lower %.2g <= e^%s", fu, to_string(up.exponent).c_str(), fl,
                  to_string(lo.exponent).c_str());
    return {true, buf};
}

std::size_t homogeneous_rank(const Line& a, const Line& b) {
    std::vector<std::vector<Rational>> m;
    for (const Vec3* p : {&a.p(), &a.q(), &b.p(), &b.q()}) m.push_back({(*p)[0], (*p)[1], (*p)[2], Rational(1)});
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 4 && rank < 4; ++col) {
        std::size_t piv = rank;
        while (piv < 4 && m[piv][col] == 0) ++piv;
        if (piv == 4) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < 4; ++r) {
            const Rational f = m[r][col] / m[rank][col];
            for (std::size_t j = col; j < 4; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

Outcome pluecker_oracle() {
    std::mt19937_64 rng(1729);
    int done = 0, coplanar = 0;
    while (done < 500) {
        const Vec3 p = random_vec(rng), q = random_vec(rng);
        if (p == q) continue;
        const Line a(p, q);
        Vec3 r = random_vec(rng), s = random_vec(rng);
        if (done % 2 == 0) {
            // Coplanar by construction: both anchors in the plane through a and r.
            s = p + random_small(rng) * (q - p) + random_small(rng) * (r - p);
        }
        if (r == s) continue;
        const Line b(r, s);
        const bool direct = homogeneous_rank(a, b) < 4;
        if (lines_coplanar(a, b) != direct) return fail("disagreement on pair " + std::to_string(done));
        coplanar += direct ? 1 : 0;
        ++done;
    }
    return {true, "500 pairs agree (" + std::to_string(coplanar) + " coplanar)"};
}

Outcome bezout_consistency() {
    std::mt19937_64 rng(4242);
    int circles = 0, lines = 0;
    long worst_circle = 0, worst_line = 0;
    while (circles < 200) {
        const Mat3 rot = rotation_matrix({static_cast<long>(rng() % 4) + 1, static_cast<long>(rng() % 5) - 2,
                                          static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2});
        const Vec3 e1 = apply(rot, {1, 0, 0}), e2 = apply(rot, {0, 1, 0}), n = apply(rot, {0, 0, 1});
        const Vec3 center = random_vec(rng);
        const Rational r = random_small(rng, 3, 2) + 4;
        const Circle c = Circle::around(center, n, r * r);
        std::vector<Vec3> pts;
        const std::size_t on = rng() % 5;  // quadric through 0..4 circle points
        for (std::size_t k = 0; k < on; ++k) pts.push_back(circle_point(center, e1, e2, r, Rational(static_cast<long>(k))));
        while (pts.size() < 9) pts.push_back(random_vec(rng, 8, 3));
        const auto q = surface_through_points(pts, 2);
        if (!q || q->degree() < 1) continue;
        const auto count = intersection_count(*q, c);
        if (!count) {
            if (!contains(*q, c)) return fail("containment dichotomy broken");
            continue;
        }
        if (*count > 4 || *count < static_cast<long>(on)) return fail("circle count " + std::to_string(*count));
        worst_circle = std::max(worst_circle, *count);
        ++circles;
    }
    while (lines < 200) {
        const Vec3 p = random_vec(rng), d = random_vec(rng);
        if (is_zero(d)) continue;
        const Line l(p, p + d);
        std::vector<Vec3> pts;
        const std::size_t on = rng() % 3;
        for (std::size_t k = 0; k < on; ++k) pts.push_back(p + Rational(static_cast<long>(k) + 1) * d);
        while (pts.size() < 9) pts.push_back(random_vec(rng, 8, 3));
        const auto q = surface_through_points(pts, 2);
        if (!q || q->degree() < 1) continue;
        const auto count = intersection_count(*q, l);
        if (!count) {
            if (!contains(*q, l)) return fail("containment dichotomy broken");
            continue;
        }
        if (*count > 2 || *count < static_cast<long>(on)) return fail("line count " + std::to_string(*count));
        worst_line = std::max(worst_line, *count);
        ++lines;
    }
    return {true, "200 circles (max " + std::to_string(worst_circle) + " <= 4), 200 lines (max " +
                      std::to_string(worst_line) + " <= 2)"};
}

Outcome pruning_fixpoint() {
    std::mt19937_64 rng(55);
    std::size_t removed = 0;
    for (int i = 0; i < 50; ++i) {
        Scene s = random_structured_scene(rng);
        s = merge(s, gen_generic(rng() % 4, rng() % 4, rng()));
        const Rational A = rational(static_cast<long>(rng() % 8) + 1, static_cast<long>(rng() % 2) + 1);
        const auto once = prune(s, A);
        const auto twice = prune(once.scene, A);
        if (!(twice.scene == once.scene)) return fail("not idempotent on scene " + std::to_string(i));
        const auto rep = all_incidences(once.scene);
        for (std::size_t k = 0; k < once.scene.size(); ++k) {
            if (Rational(static_cast<unsigned long>(rep.count_of(k))) < A) return fail("survivor below A");
        }
        removed += s.size() - once.scene.size();
    }
    return {true, "50 scenes, " + std::to_string(removed) + " curves pruned in total"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"hyperboloid construction", hyperboloid_construction},
        {"structure recovery", structure_recovery},
        {"minimal-degree fitting", minimal_degree},
        {"covering algorithm", covering},
        {"complex counterexample", complex_counterexample},
        {"greedy matching", greedy_matching_size},
        {"chernoff tails", chernoff_regime},
        {"pluecker oracle", pluecker_oracle},
        {"bezout consistency", bezout_consistency},
        {"pruning fixpoint", pruning_fixpoint},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %2zu %-26s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
