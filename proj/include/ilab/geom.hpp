#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <variant>
#include <vector>

#include "ilab/scalar.hpp"

namespace ilab {

using Vec3 = std::array<Rational, 3>;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Rational& s, const Vec3& a);
Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& a);
bool proportional(const Vec3& a, const Vec3& b);

/// Point of R^3 whose coordinates live in a common real quadratic field.
struct Point3 {
    std::array<QuadExt, 3> coords;

    static Point3 from_rational(const Vec3& v) { return {{QuadExt(v[0]), QuadExt(v[1]), QuadExt(v[2])}}; }
    bool is_rational() const;

    friend bool operator==(const Point3&, const Point3&) = default;
    friend std::strong_ordering structural_cmp(const Point3& a, const Point3& b);
};

struct Point3Less {
    bool operator()(const Point3& a, const Point3& b) const { return structural_cmp(a, b) < 0; }
};

/// Plücker six-tuple in the order (xy, xz, xw, yz, yw, zw), scaled to coprime
/// integers with the first nonzero entry positive.
using Pluecker = std::array<Integer, 6>;

/// Canonical projective scaling of a rational tuple: coprime integers, first
/// nonzero entry positive. An all-zero tuple is returned unchanged.
template <std::size_t N>
std::array<Integer, N> canonical_scaling(const std::array<Rational, N>& v) {
    Integer den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::array<Integer, N> out;
    Integer g = 0;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = v[i].get_num() * (den / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g == 0) return out;
    int lead = 0;
    for (const auto& x : out) {
        if (x != 0) {
            lead = sgn(x);
            break;
        }
    }
    if (lead < 0) g = -g;
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

Pluecker pluecker_from_points(const Vec3& p, const Vec3& q);

/// Reciprocal product of two Plücker tuples; zero iff the lines are coplanar.
Integer pluecker_pairing(const Pluecker& a, const Pluecker& b);

class Line {
public:
    /// Throws ContractError when p == q.
    Line(Vec3 p, Vec3 q);

    const Vec3& p() const { return p_; }
    const Vec3& q() const { return q_; }
    Vec3 direction() const { return q_ - p_; }
    const Pluecker& pluecker() const { return pluecker_; }

    friend bool operator==(const Line& a, const Line& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

private:
    Vec3 p_;
    Vec3 q_;
    Pluecker pluecker_;
};

/// Circle as the section of the sphere |x - center|^2 = r2 by the plane
/// normal . x = offset.
class Circle {
public:
    /// Throws ContractError when normal == 0, the center is off the plane, or r2 <= 0.
    Circle(Vec3 normal, Rational offset, Vec3 center, Rational r2);

    /// Circle in the plane through `center` with the given normal.
    static Circle around(const Vec3& center, const Vec3& normal, const Rational& r2);

    const Vec3& normal() const { return normal_; }
    const Rational& offset() const { return offset_; }
    const Vec3& center() const { return center_; }
    const Rational& r2() const { return r2_; }

    friend bool operator==(const Circle&, const Circle&) = default;

private:
    Vec3 normal_;
    Rational offset_;
    Vec3 center_;
    Rational r2_;
};

/// Orthogonal rational basis (e1, e2) of the direction space of a plane with
/// the given normal. For the normal (0,0,1) this is ((1,0,0), (0,1,0)).
struct PlaneFrame {
    Vec3 e1;
    Vec3 e2;
};
PlaneFrame plane_frame(const Vec3& normal);

bool lines_coplanar(const Line& a, const Line& b);

bool on_line(const Point3& x, const Line& l);
bool on_circle(const Point3& x, const Circle& c);

/// Affine common points of a line and a circle, sorted structurally.
std::vector<Point3> line_circle_intersection(const Line& l, const Circle& c);

/// Projective direction with components in an imaginary quadratic field.
using IsoDirection = std::array<ImagQuad, 3>;

/// The two points where a circle's complexification meets the absolute conic
/// x^2 + y^2 + z^2 = 0, w = 0. Each direction is scaled so its first nonzero
/// component is 1; the pair is sorted structurally.
struct IdealPair {
    std::array<IsoDirection, 2> dirs;
    friend bool operator==(const IdealPair&, const IdealPair&) = default;
};

IdealPair ideal_points(const Circle& c);

/// Ten coefficients of a degree <= 2 polynomial in the order
/// x^2, xy, xz, y^2, yz, z^2, x, y, z, 1; canonically scaled.
struct Quadric {
    std::array<Rational, 10> coeffs;

    /// Throws ContractError if all coefficients vanish.
    static Quadric from_coeffs(const std::array<Rational, 10>& c);

    /// Symmetric 4x4 matrix of the homogeneous form over (x, y, z, w).
    std::array<std::array<Rational, 4>, 4> matrix() const;

    friend bool operator==(const Quadric&, const Quadric&) = default;
};

struct Scene {
    std::vector<Line> lines;
    std::vector<Circle> circles;

    std::size_t size() const { return lines.size() + circles.size(); }
    bool empty() const { return lines.empty() && circles.empty(); }
    friend bool operator==(const Scene&, const Scene&) = default;
};

/// Curves are addressed globally: lines first (0..n-1), then circles (n..n+m-1).
using CurveRef = std::variant<const Line*, const Circle*>;
CurveRef curve_at(const Scene& s, std::size_t index);

}  // namespace ilab
