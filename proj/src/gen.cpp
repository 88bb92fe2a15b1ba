#include "ilab/gen.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ilab/error.hpp"

namespace ilab {

RulingFamily parse_family(std::string_view text) {
    if (text == "first") return RulingFamily::first;
    if (text == "second") return RulingFamily::second;
    if (text == "both") return RulingFamily::both;
    throw ParseError("unknown ruling family '" + std::string(text) + "'");
}

std::vector<Rational> distinct_params(std::size_t k, const Rational& step) {
    std::vector<Rational> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const long mag = static_cast<long>((i + 1) / 2);
        out.push_back(step * (i % 2 == 1 ? mag : -mag));
    }
    return out;
}

namespace {

Line ruling(const Rational& u, int sign) {
    const Rational den = 1 + u * u;
    const Vec3 base{(1 - u * u) / den, 2 * u / den, Rational(0)};
    const Vec3 dir{-2 * u / den, (1 - u * u) / den, Rational(sign)};
    return Line(base, base + dir);
}

}  // namespace

Scene gen_hyperboloid(std::size_t k, std::size_t m, RulingFamily family) {
    Scene s;
    const std::size_t first = family == RulingFamily::first    ? k
                              : family == RulingFamily::second ? 0
                                                               : k / 2;
    for (const auto& u : distinct_params(first)) s.lines.push_back(ruling(u, 1));
    for (const auto& u : distinct_params(k - first)) s.lines.push_back(ruling(u, -1));
    for (const auto& c : distinct_params(m)) {
        s.circles.push_back(Circle({0, 0, 1}, c, {0, 0, c}, 1 + c * c));
    }
    return s;
}

Scene gen_planar(std::size_t k, std::size_t m) {
    Scene s;
    const auto slopes = distinct_params(k, rational(1, 2));
    for (const auto& a : slopes) {
        s.lines.emplace_back(Vec3{a, a * a, 0}, Vec3{a + 1, a * a + 2 * a, 0});
    }
    // Crossing of the tangents at a and b.
    std::vector<Vec3> crossings;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            crossings.push_back({(slopes[i] + slopes[j]) / 2, slopes[i] * slopes[j], 0});
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        const Vec3 center{rational(static_cast<long>(j), 4), 0, 0};
        const Rational radius = 4 + static_cast<long>(j);
        Rational r2 = radius * radius;
        auto hits_crossing = [&] {
            return std::any_of(crossings.begin(), crossings.end(), [&](const Vec3& x) {
                const Vec3 d = x - center;
                return dot(d, d) == r2;
            });
        };
        while (hits_crossing()) r2 += rational(1, 97);
        s.circles.push_back(Circle({0, 0, 1}, 0, center, r2));
    }
    return s;
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 13) - 6;
    const long den = static_cast<long>(rng() % 4) + 1;
    return rational(num, den);
}

Vec3 small_vec(std::mt19937_64& rng) { return {small_rational(rng), small_rational(rng), small_rational(rng)}; }

}  // namespace

Scene gen_generic(std::size_t k, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Scene s;
    while (s.lines.size() < k) {
        const Vec3 p = small_vec(rng), q = small_vec(rng);
        if (p != q) s.lines.emplace_back(p, q);
    }
    while (s.circles.size() < m) {
        const Vec3 n = small_vec(rng), c = small_vec(rng);
        const long num = static_cast<long>(rng() % 6) + 1;
        const long den = static_cast<long>(rng() % 4) + 1;
        const Rational r2 = rational(num, den);
        if (!is_zero(n)) s.circles.emplace_back(n, dot(n, c), c, r2);
    }
    return s;
}

Scene translate(const Scene& s, const Vec3& v) {
    Scene out;
    for (const auto& l : s.lines) out.lines.emplace_back(l.p() + v, l.q() + v);
    for (const auto& c : s.circles) {
        out.circles.emplace_back(c.normal(), c.offset() + dot(c.normal(), v), c.center() + v, c.r2());
    }
    return out;
}

Scene scale(const Scene& s, const Rational& factor) {
    if (factor <= 0) throw ContractError("scale: factor must be positive");
    Scene out;
    for (const auto& l : s.lines) out.lines.emplace_back(factor * l.p(), factor * l.q());
    for (const auto& c : s.circles) {
        out.circles.emplace_back(c.normal(), factor * c.offset(), factor * c.center(), factor * factor * c.r2());
    }
    return out;
}

Mat3 rotation_matrix(const std::array<long, 4>& quat) {
    const Rational a = quat[0], b = quat[1], c = quat[2], d = quat[3];
    const Rational n = a * a + b * b + c * c + d * d;
    if (n == 0) throw ContractError("rotation_matrix: zero quaternion");
    Mat3 r{Vec3{a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)},
           Vec3{2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)},
           Vec3{2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d}};
    for (auto& row : r) {
        for (auto& x : row) x /= n;
    }
    return r;
}

Vec3 apply(const Mat3& r, const Vec3& v) { return {dot(r[0], v), dot(r[1], v), dot(r[2], v)}; }

Scene rotate(const Scene& s, const std::array<long, 4>& quaternion) {
    const Mat3 r = rotation_matrix(quaternion);
    Scene out;
    for (const auto& l : s.lines) out.lines.emplace_back(apply(r, l.p()), apply(r, l.q()));
    for (const auto& c : s.circles) {
        out.circles.emplace_back(apply(r, c.normal()), c.offset(), apply(r, c.center()), c.r2());
    }
    return out;
}

Scene merge(const Scene& a, const Scene& b) {
    Scene out = a;
    out.lines.insert(out.lines.end(), b.lines.begin(), b.lines.end());
    out.circles.insert(out.circles.end(), b.circles.begin(), b.circles.end());
    return out;
}

std::array<GaussRational, 4> quartic_point(const Rational& t, const Rational& s) {
    const GaussRational i = GaussRational::i();
    const Rational t2 = t * t;
    return {GaussRational(t2 - 1), i * GaussRational(t2 - 1 - 2 * s * t), GaussRational(s * (t2 + 1)),
            GaussRational(s * (t2 - 1) + 4 * t)};
}

GaussRational quartic_form(const std::array<GaussRational, 4>& p) {
    const auto& [x, y, z, w] = p;
    const GaussRational sum = x * x + y * y + z * z;
    const GaussRational xi = x + GaussRational::i() * y;
    return sum * sum + (xi * xi - z * z) * w * w;
}

namespace {

using GaussVec = std::array<GaussRational, 4>;

std::size_t gauss_rank(std::vector<GaussVec> rows) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 4 && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const GaussRational f = rows[r][col] / rows[rank][col];
            for (std::size_t j = col; j < 4; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Scaled so the first nonzero coordinate is 1.
GaussVec projective_normal(GaussVec v) {
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        const GaussRational lead = x;
        for (auto& y : v) y = y / lead;
        break;
    }
    return v;
}

struct GaussVecLess {
    bool operator()(const GaussVec& a, const GaussVec& b) const {
        for (std::size_t i = 0; i < 4; ++i) {
            if (a[i].re != b[i].re) return a[i].re < b[i].re;
            if (a[i].im != b[i].im) return a[i].im < b[i].im;
        }
        return false;
    }
};

bool on_sphere(const GaussVec& p, const Rational& s) {
    const auto& [x, y, z, w] = p;
    return (x * x + y * y + z * z - GaussRational(s) * x * w).is_zero();
}

void require_distinct(const std::vector<Rational>& v, const char* name) {
    if (v.empty()) throw ContractError(std::string("complex_quartic_check: empty ") + name + " grid");
    std::set<Rational> seen(v.begin(), v.end());
    if (seen.size() != v.size()) throw ContractError(std::string("complex_quartic_check: repeated ") + name + " value");
}

}  // namespace

QuarticReport complex_quartic_check(const std::vector<Rational>& T, const std::vector<Rational>& S) {
    require_distinct(T, "t");
    require_distinct(S, "s");
    QuarticReport rep;
    rep.t_values = T;
    rep.s_values = S;

    // Extra parameter values so every curve is probed beyond the grid.
    const std::vector<Rational> extra{0, 1, -1, 2, rational(1, 3)};
    auto params = [&](const std::vector<Rational>& grid) {
        std::set<Rational> all(grid.begin(), grid.end());
        all.insert(extra.begin(), extra.end());
        return std::vector<Rational>(all.begin(), all.end());
    };
    const auto all_s = params(S), all_t = params(T);

    for (const auto& t : T) {
        for (const auto& s : S) {
            ++rep.points_checked;
            if (!quartic_form(quartic_point(t, s)).is_zero()) rep.surface_failures.push_back({t, s});
        }
    }
    for (const auto& t : T) {
        std::vector<GaussVec> pts;
        for (const auto& s : all_s) pts.push_back(quartic_point(t, s));
        if (gauss_rank(pts) != 2) rep.line_failures.push_back(t);
    }
    for (const auto& s : S) {
        std::vector<GaussVec> pts;
        bool sphere = true;
        for (const auto& t : all_t) {
            pts.push_back(quartic_point(t, s));
            sphere = sphere && on_sphere(pts.back(), s);
        }
        const auto r = gauss_rank(pts);
        if (!sphere || r > 3) rep.circle_failures.push_back(s);
        if (r < 3) rep.degenerate_circles.push_back(s);
    }

    std::set<GaussVec, GaussVecLess> distinct;
    for (const auto& t : T) {
        const GaussVec a = quartic_point(t, 0), b = quartic_point(t, 1);
        for (const auto& s : S) {
            const GaussVec p = quartic_point(t, s);
            const bool nonzero = std::any_of(p.begin(), p.end(), [](const GaussRational& x) { return !x.is_zero(); });
            const bool on_line = gauss_rank({a, b, p}) == 2;
            std::vector<GaussVec> circle{p};
            for (const auto& u : all_t) circle.push_back(quartic_point(u, s));
            const bool on_circle = on_sphere(p, s) && gauss_rank(circle) == gauss_rank({circle.begin() + 1, circle.end()});
            if (nonzero && on_line && on_circle) {
                ++rep.verified_intersections;
                distinct.insert(projective_normal(p));
            } else {
                rep.incidence_failures.push_back({t, s});
            }
        }
    }
    rep.distinct_points = distinct.size();
    return rep;
}

}  // namespace ilab
