#pragma once

// Independent oracles shared by the test binaries.

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "ilab/geom.hpp"
#include "ilab/poly.hpp"

namespace testing_support {

using namespace ilab;

inline MultiPoly X() { return MultiPoly::variable(0); }
inline MultiPoly Y() { return MultiPoly::variable(1); }
inline MultiPoly Z() { return MultiPoly::variable(2); }
inline MultiPoly C(long c) { return MultiPoly::constant(Rational(c)); }

inline MultiPoly hyperboloid_poly() { return X() * X() + Y() * Y() - Z() * Z() - C(1); }

inline bool proportional(const MultiPoly& a, const MultiPoly& b) { return a.canonical() == b.canonical(); }

struct ApproxPoint {
    double x, y, z;
};

// Real points of line ∩ circle in floating point, from the plane/sphere
// equations directly (no quadratic-field arithmetic).
inline std::vector<ApproxPoint> approx_intersection(const Line& l, const Circle& c) {
    auto d = [](const Rational& q) { return q.get_d(); };
    const Vec3 dir = l.direction();
    const Rational nd = dot(c.normal(), dir);
    const Rational np = dot(c.normal(), l.p()) - c.offset();
    std::vector<double> ts;
    const Vec3 rel = l.p() - c.center();
    if (nd != 0) {
        const Rational t = -np / nd;
        const Vec3 x = rel + t * dir;
        if (dot(x, x) == c.r2()) ts.push_back(t.get_d());
    } else if (np == 0) {
        const Rational a = dot(dir, dir), b = 2 * dot(dir, rel), c0 = dot(rel, rel) - c.r2();
        const Rational disc = b * b - 4 * a * c0;
        if (disc == 0) {
            ts.push_back(d(-b / (2 * a)));
        } else if (disc > 0) {
            const double s = std::sqrt(d(disc));
            ts.push_back((-d(b) - s) / (2 * d(a)));
            ts.push_back((-d(b) + s) / (2 * d(a)));
        }
    }
    std::vector<ApproxPoint> out;
    for (double t : ts) {
        out.push_back({d(l.p()[0]) + t * d(dir[0]), d(l.p()[1]) + t * d(dir[1]), d(l.p()[2]) + t * d(dir[2])});
    }
    return out;
}

// |P(L, C)| by floating-point clustering; adequate for well-separated scenes.
inline std::size_t approx_point_count(const Scene& s, double tol = 1e-7) {
    std::vector<ApproxPoint> pts;
    for (const auto& l : s.lines) {
        for (const auto& c : s.circles) {
            for (auto p : approx_intersection(l, c)) {
                bool seen = false;
                for (const auto& q : pts) {
                    if (std::abs(p.x - q.x) < tol && std::abs(p.y - q.y) < tol && std::abs(p.z - q.z) < tol) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) pts.push_back(p);
            }
        }
    }
    return pts.size();
}

inline Rational random_small(std::mt19937_64& rng, long range = 5, long max_den = 3) {
    const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
    const long den = static_cast<long>(rng() % max_den) + 1;
    return rational(num, den);
}

inline Vec3 random_vec(std::mt19937_64& rng, long range = 5, long max_den = 3) {
    Vec3 v;
    for (auto& x : v) x = random_small(rng, range, max_den);
    return v;
}

// Rational point of the unit circle: ((1 - u^2) / (1 + u^2), 2u / (1 + u^2)).
inline std::pair<Rational, Rational> unit_circle_point(const Rational& u) {
    const Rational den = 1 + u * u;
    return {(1 - u * u) / den, 2 * u / den};
}

// Point of a circle given an orthonormal-up-to-scale frame: center + r (cos e1/|e1| + sin e2/|e2|)
// is rational only for special frames, so circles in tests use frames with |e1| = |e2| = 1.
inline Vec3 circle_point(const Vec3& center, const Vec3& e1, const Vec3& e2, const Rational& r, const Rational& u) {
    const auto [cs, sn] = unit_circle_point(u);
    return center + (r * cs) * e1 + (r * sn) * e2;
}

}  // namespace testing_support
