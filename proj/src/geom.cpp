#include "ilab/geom.hpp"

#include <algorithm>
#include <cstdlib>

#include "ilab/error.hpp"

namespace ilab {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

bool proportional(const Vec3& a, const Vec3& b) { return is_zero(cross(a, b)); }

bool Point3::is_rational() const {
    return std::all_of(coords.begin(), coords.end(), [](const QuadExt& c) { return c.is_rational(); });
}

std::strong_ordering structural_cmp(const Point3& a, const Point3& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (auto c = structural_cmp(a.coords[i], b.coords[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Pluecker pluecker_from_points(const Vec3& p, const Vec3& q) {
    if (p == q) throw ContractError("pluecker_from_points: anchor points coincide");
    // Homogenize with w = 1 on both points.
    const Rational one(1);
    const std::array<Rational, 4> a{p[0], p[1], p[2], one};
    const std::array<Rational, 4> b{q[0], q[1], q[2], one};
    auto m = [&](int i, int j) -> Rational { return a[i] * b[j] - b[i] * a[j]; };
    return canonical_scaling<6>({m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)});
}

Integer pluecker_pairing(const Pluecker& a, const Pluecker& b) {
    return a[0] * b[5] - a[1] * b[4] + a[2] * b[3] + a[3] * b[2] - a[4] * b[1] + a[5] * b[0];
}

Line::Line(Vec3 p, Vec3 q) : p_(std::move(p)), q_(std::move(q)), pluecker_(pluecker_from_points(p_, q_)) {}

Circle::Circle(Vec3 normal, Rational offset, Vec3 center, Rational r2)
    : normal_(std::move(normal)), offset_(std::move(offset)), center_(std::move(center)), r2_(std::move(r2)) {
    if (is_zero(normal_)) throw ContractError("circle: plane normal must be nonzero");
    if (dot(normal_, center_) != offset_) throw ContractError("circle: center must lie on its plane");
    if (r2_ <= 0) throw ContractError("circle: squared radius must be positive");
}

Circle Circle::around(const Vec3& center, const Vec3& normal, const Rational& r2) {
    return Circle(normal, dot(normal, center), center, r2);
}

PlaneFrame plane_frame(const Vec3& normal) {
    std::size_t big = 0;
    for (std::size_t i = 1; i < 3; ++i) {
        if (abs(normal[i]) > abs(normal[big])) big = i;
    }
    Vec3 axis{Rational(0), Rational(0), Rational(0)};
    axis[(big + 2) % 3] = 1;
    PlaneFrame f;
    f.e1 = cross(axis, normal);
    f.e2 = cross(normal, f.e1);
    return f;
}

bool lines_coplanar(const Line& a, const Line& b) { return pluecker_pairing(a.pluecker(), b.pluecker()) == 0; }

namespace {

std::array<QuadExt, 3> minus(const Point3& x, const Vec3& v) {
    return {x.coords[0] - QuadExt(v[0]), x.coords[1] - QuadExt(v[1]), x.coords[2] - QuadExt(v[2])};
}

}  // namespace

bool on_line(const Point3& x, const Line& l) {
    const auto w = minus(x, l.p());
    const Vec3 d = l.direction();
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        if (w[i] * QuadExt(d[j]) != w[j] * QuadExt(d[i])) return false;
    }
    return true;
}

bool on_circle(const Point3& x, const Circle& c) {
    const QuadExt lhs = x.coords[0] * QuadExt(c.normal()[0]) + x.coords[1] * QuadExt(c.normal()[1]) +
                        x.coords[2] * QuadExt(c.normal()[2]);
    if (lhs != QuadExt(c.offset())) return false;
    const auto w = minus(x, c.center());
    return w[0] * w[0] + w[1] * w[1] + w[2] * w[2] == QuadExt(c.r2());
}

std::vector<Point3> line_circle_intersection(const Line& l, const Circle& c) {
    const Vec3 dir = l.direction();
    const Rational nd = dot(c.normal(), dir);
    const Rational np = dot(c.normal(), l.p());
    std::vector<Point3> out;
    if (nd != 0) {
        const Rational t = (c.offset() - np) / nd;
        const Vec3 x = l.p() + t * dir;
        const Vec3 w = x - c.center();
        if (dot(w, w) == c.r2()) out.push_back(Point3::from_rational(x));
        return out;
    }
    if (np != c.offset()) return out;
    // Line lies in the circle's plane: |p + t dir - center|^2 = r2.
    const Vec3 w = l.p() - c.center();
    const Rational qa = dot(dir, dir);
    const Rational qb = 2 * dot(dir, w);
    const Rational qc = dot(w, w) - c.r2();
    const Rational disc = qb * qb - 4 * qa * qc;
    if (disc < 0) return out;
    const Rational t0 = -qb / (2 * qa);
    if (disc == 0) {
        out.push_back(Point3::from_rational(l.p() + t0 * dir));
        return out;
    }
    const Rational half = Rational(1) / (2 * qa);
    for (int s : {1, -1}) {
        Point3 x;
        for (int i = 0; i < 3; ++i) {
            x.coords[i] = QuadExt::normalize(l.p()[i] + dir[i] * t0, s * dir[i] * half, disc);
        }
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end(), Point3Less{});
    return out;
}

namespace {

IsoDirection scale_first_to_one(IsoDirection v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            const ImagQuad lead = x;
            for (auto& y : v) y = y / lead;
            break;
        }
    }
    return v;
}

bool iso_less(const IsoDirection& a, const IsoDirection& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (auto c = structural_cmp(a[i], b[i]); c != 0) return c < 0;
    }
    return false;
}

}  // namespace

IdealPair ideal_points(const Circle& c) {
    // With u in the plane and w = n x u, the isotropic directions are
    // w +- sqrt(-|n|^2) u.
    const Vec3& n = c.normal();
    const Vec3 u = plane_frame(n).e1;
    const Vec3 w = cross(n, u);
    const Rational nn = dot(n, n);
    IdealPair pair;
    for (int k = 0; k < 2; ++k) {
        const int s = k == 0 ? 1 : -1;
        IsoDirection v;
        for (int i = 0; i < 3; ++i) v[i] = ImagQuad::normalize(w[i], s * u[i], nn);
        pair.dirs[k] = scale_first_to_one(v);
    }
    if (iso_less(pair.dirs[1], pair.dirs[0])) std::swap(pair.dirs[0], pair.dirs[1]);
    return pair;
}

Quadric Quadric::from_coeffs(const std::array<Rational, 10>& c) {
    const auto scaled = canonical_scaling<10>(c);
    if (std::all_of(scaled.begin(), scaled.end(), [](const Integer& z) { return z == 0; })) {
        throw ContractError("quadric: all coefficients vanish");
    }
    Quadric q;
    for (std::size_t i = 0; i < 10; ++i) q.coeffs[i] = Rational(scaled[i]);
    return q;
}

std::array<std::array<Rational, 4>, 4> Quadric::matrix() const {
    const auto& c = coeffs;
    const Rational h(1, 2);
    return {{{c[0], h * c[1], h * c[2], h * c[6]},
             {h * c[1], c[3], h * c[4], h * c[7]},
             {h * c[2], h * c[4], c[5], h * c[8]},
             {h * c[6], h * c[7], h * c[8], c[9]}}};
}

CurveRef curve_at(const Scene& s, std::size_t index) {
    if (index < s.lines.size()) return &s.lines[index];
    index -= s.lines.size();
    if (index < s.circles.size()) return &s.circles[index];
    throw ContractError("curve index out of range");
}

}  // namespace ilab
