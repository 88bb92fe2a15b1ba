#include "ilab/detect.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ilab/error.hpp"
#include "ilab/fitter.hpp"
#include "ilab/linalg.hpp"
#include "ilab/parallel.hpp"

namespace ilab {

std::string_view to_string(QuadricKind kind) {
    switch (kind) {
        case QuadricKind::plane: return "plane";
        case QuadricKind::hyperboloid_one_sheet: return "hyperboloid-one-sheet";
        case QuadricKind::cone: return "cone";
        case QuadricKind::cylinder: return "cylinder";
        case QuadricKind::other_quadric: return "other-quadric";
    }
    return "other-quadric";
}

bool is_structured_kind(QuadricKind kind) { return kind != QuadricKind::other_quadric; }

std::pair<int, int> Inertia::unsigned_signature() const {
    return {std::max(positive, negative), std::min(positive, negative)};
}

namespace {

template <std::size_t N>
Rational principal_minor(const SymMatrix<N>& m, const std::vector<std::size_t>& idx) {
    const std::size_t k = idx.size();
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m[idx[i]][idx[j]];
    }
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && a[p][c] == 0) ++p;
        if (p == k) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < k; ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

int variations(const std::vector<Rational>& seq) {
    int count = 0, prev = 0;
    for (const auto& x : seq) {
        const int s = sgn(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

template <std::size_t N>
std::array<Rational, N + 1> characteristic_polynomial(const SymMatrix<N>& m) {
    // Sum of k x k principal minors E_k; coefficient of t^(N-k) is (-1)^k E_k.
    std::array<Rational, N + 1> e{};
    e[0] = 1;
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < N; ++i) {
            if (mask & (1u << i)) idx.push_back(i);
        }
        e[idx.size()] += principal_minor(m, idx);
    }
    std::array<Rational, N + 1> c{};
    for (std::size_t k = 0; k <= N; ++k) c[N - k] = (k % 2 == 0) ? e[k] : Rational(-e[k]);
    return c;
}

template <std::size_t N>
Inertia inertia(const SymMatrix<N>& m) {
    // Real-rooted, so Descartes' rule of signs is exact.
    const auto c = characteristic_polynomial<N>(m);
    std::vector<Rational> high_to_low(c.rbegin(), c.rend());
    std::vector<Rational> mirrored;
    for (std::size_t j = N + 1; j-- > 0;) mirrored.push_back(j % 2 == 0 ? c[j] : Rational(-c[j]));
    Inertia out;
    out.positive = variations(high_to_low);
    out.negative = variations(mirrored);
    while (out.zero <= static_cast<int>(N) && c[out.zero] == 0) ++out.zero;
    return out;
}

template std::array<Rational, 4> characteristic_polynomial<3>(const SymMatrix<3>&);
template std::array<Rational, 5> characteristic_polynomial<4>(const SymMatrix<4>&);
template Inertia inertia<3>(const SymMatrix<3>&);
template Inertia inertia<4>(const SymMatrix<4>&);

Quadric to_quadric(const MultiPoly& poly) {
    if (poly.degree() > 2) throw ContractError("to_quadric: degree exceeds 2");
    const auto basis = monomial_basis(2);
    std::array<Rational, 10> c;
    for (std::size_t i = 0; i < 10; ++i) c[i] = poly.coeff(basis[i]);
    return Quadric::from_coeffs(c);
}

MultiPoly to_poly(const Quadric& q) {
    return MultiPoly::from_basis(monomial_basis(2), std::vector<Rational>(q.coeffs.begin(), q.coeffs.end()));
}

QuadricKind classify_quadric(const Quadric& q) {
    const bool quadratic = std::any_of(q.coeffs.begin(), q.coeffs.begin() + 6, [](const Rational& x) { return x != 0; });
    const bool linear = std::any_of(q.coeffs.begin() + 6, q.coeffs.begin() + 9, [](const Rational& x) { return x != 0; });
    if (!quadratic) {
        if (!linear) throw ContractError("classify_quadric: degree must be 1 or 2");
        return QuadricKind::plane;
    }
    const auto m4 = q.matrix();
    SymMatrix<3> m3;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m3[i][j] = m4[i][j];
    }
    const Inertia full = inertia<4>(m4);
    const Inertia block = inertia<3>(m3);
    const auto sig4 = full.unsigned_signature();
    const auto sig3 = block.unsigned_signature();
    using P = std::pair<int, int>;
    if (full.rank() == 4) {
        // Central and of signature (2,2): a x^2 + b y^2 - c z^2 = r after a motion.
        if (sig4 == P{2, 2} && block.rank() == 3) return QuadricKind::hyperboloid_one_sheet;
        return QuadricKind::other_quadric;
    }
    if (full.rank() == 3) {
        if (block.rank() == 3 && sig4 == P{2, 1}) return QuadricKind::cone;
        if (block.rank() == 2 && sig3 == P{2, 0} && sig4 == P{2, 1}) return QuadricKind::cylinder;
    }
    return QuadricKind::other_quadric;
}

QuadricKind classify_quadric(const MultiPoly& poly) {
    const int d = poly.degree();
    if (d != 1 && d != 2) throw ContractError("classify_quadric: degree must be 1 or 2");
    return classify_quadric(to_quadric(poly));
}

std::optional<MultiPoly> fit_quadric_to_seed(const std::vector<CurveRef>& seed) {
    if (seed.empty()) throw ContractError("fit_quadric_to_seed: empty seed");
    const auto kernel = nullspace(assemble_constraints_serial(seed, 2), 10);
    if (kernel.empty()) return std::nullopt;
    return MultiPoly::from_basis(monomial_basis(2), kernel.front()).canonical();
}

std::vector<std::array<std::size_t, 3>> seed_triples(std::size_t n, const DetectOptions& opt) {
    std::vector<std::array<std::size_t, 3>> out;
    if (n < 3) return out;
    const Integer total = Integer(static_cast<unsigned long>(n)) * (n - 1) * (n - 2) / 6;
    if (total <= Integer(static_cast<unsigned long>(opt.exhaustive_limit))) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
            }
        }
        return out;
    }
    std::mt19937_64 rng(opt.seed);
    std::set<std::array<std::size_t, 3>> seen;
    const std::size_t max_draws = 20 * opt.seed_budget + 100;
    for (std::size_t draw = 0; draw < max_draws && out.size() < opt.seed_budget; ++draw) {
        std::array<std::size_t, 3> t{rng() % n, rng() % n, rng() % n};
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) continue;
        if (seen.insert(t).second) out.push_back(t);
    }
    return out;
}

namespace {

// Degree-2 containment rows of every curve, computed once per scene.
std::vector<RatMatrix> constraint_cache(const Scene& scene, bool parallel) {
    std::vector<RatMatrix> cache(scene.size());
    auto fill = [&](std::size_t i) { cache[i] = containment_constraints(curve_at(scene, i), 2); };
    if (parallel) {
        parallel_for(scene.size(), fill);
    } else {
        for (std::size_t i = 0; i < scene.size(); ++i) fill(i);
    }
    return cache;
}

bool annihilates(const RatMatrix& rows, const RatVector& v) {
    for (const auto& x : multiply(rows, v)) {
        if (x != 0) return false;
    }
    return true;
}

std::optional<StructuredFamily> fit_seed(const std::vector<RatMatrix>& cache, const std::array<std::size_t, 3>& seed,
                                         const Rational& A) {
    static const auto basis = monomial_basis(2);
    RatMatrix stacked;
    for (auto i : seed) stacked.insert(stacked.end(), cache[i].begin(), cache[i].end());

    // Linear part: the last four columns (x, y, z, 1).
    RatMatrix lin;
    lin.reserve(stacked.size());
    for (const auto& row : stacked) lin.emplace_back(row.begin() + 6, row.end());
    MultiPoly surface;
    if (auto k1 = nullspace(lin, 4); !k1.empty()) {
        RatVector full(6);
        full.insert(full.end(), k1.front().begin(), k1.front().end());
        surface = MultiPoly::from_basis(basis, full).canonical();
    } else {
        auto k2 = nullspace(stacked, 10);
        if (k2.empty()) return std::nullopt;
        surface = MultiPoly::from_basis(basis, k2.front()).canonical();
    }
    const QuadricKind kind = classify_quadric(surface);
    if (!is_structured_kind(kind)) return std::nullopt;

    RatVector coeffs;
    for (const auto& e : basis) coeffs.push_back(surface.coeff(e));
    StructuredFamily fam{surface, kind, {}};
    for (std::size_t i = 0; i < cache.size(); ++i) {
        if (annihilates(cache[i], coeffs)) fam.members.push_back(i);
    }
    if (Rational(static_cast<unsigned long>(fam.members.size())) < A) return std::nullopt;
    return fam;
}

std::vector<StructuredFamily> reduce_families(std::vector<std::optional<StructuredFamily>> found) {
    std::vector<StructuredFamily> out;
    for (auto& f : found) {
        if (!f) continue;
        const bool dup = std::any_of(out.begin(), out.end(), [&](const StructuredFamily& g) { return g.surface == f->surface; });
        if (!dup) out.push_back(std::move(*f));
    }
    std::sort(out.begin(), out.end(), [](const StructuredFamily& a, const StructuredFamily& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return structural_cmp(a.surface, b.surface) < 0;
    });
    return out;
}

void check_options(const DetectOptions& opt) {
    if (opt.A < 3) throw ContractError("find_structured_families: A must be >= 3");
}

}  // namespace

std::vector<StructuredFamily> find_structured_families_serial(const Scene& scene, const DetectOptions& opt) {
    check_options(opt);
    const auto seeds = seed_triples(scene.size(), opt);
    const auto cache = constraint_cache(scene, false);
    std::vector<std::optional<StructuredFamily>> found(seeds.size());
    for (std::size_t s = 0; s < seeds.size(); ++s) found[s] = fit_seed(cache, seeds[s], opt.A);
    return reduce_families(std::move(found));
}

std::vector<StructuredFamily> find_structured_families(const Scene& scene, const DetectOptions& opt) {
    check_options(opt);
    const auto seeds = seed_triples(scene.size(), opt);
    const auto cache = constraint_cache(scene, true);
    std::vector<std::optional<StructuredFamily>> found(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t s) { found[s] = fit_seed(cache, seeds[s], opt.A); });
    return reduce_families(std::move(found));
}

}  // namespace ilab
