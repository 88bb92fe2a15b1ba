#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ilab/geom.hpp"

namespace ilab {

enum class RulingFamily { first, second, both };

/// Throws ParseError for anything other than "first", "second", "both".
RulingFamily parse_family(std::string_view text);

/// First k terms of 0, 1, -1, 2, -2, ... scaled by `step`.
std::vector<Rational> distinct_params(std::size_t k, const Rational& step = Rational(1));

/// k rulings and m horizontal circles of x^2 + y^2 - z^2 = 1. "both" puts the
/// first k/2 lines in the first family and the rest in the second.
Scene gen_hyperboloid(std::size_t k, std::size_t m, RulingFamily family = RulingFamily::first);

/// k tangents of the parabola y = x^2 and m nested disjoint circles, all in
/// z = 0, with no three curves through a common point.
Scene gen_planar(std::size_t k, std::size_t m);

/// Lines and circles with small random rational data.
Scene gen_generic(std::size_t k, std::size_t m, std::uint64_t seed);

Scene translate(const Scene& s, const Vec3& v);
/// Throws ContractError unless factor > 0.
Scene scale(const Scene& s, const Rational& factor);
/// Rotation by the unit quaternion (a, b, c, d) / |.|; rational for integer input.
/// Throws ContractError for the zero quaternion.
Scene rotate(const Scene& s, const std::array<long, 4>& quaternion);
using Mat3 = std::array<Vec3, 3>;
Mat3 rotation_matrix(const std::array<long, 4>& quaternion);
Vec3 apply(const Mat3& r, const Vec3& v);
/// Lines of a, then lines of b; same for circles.
Scene merge(const Scene& a, const Scene& b);

/// Projective point of the complex quartic parametrization at (t, s).
std::array<GaussRational, 4> quartic_point(const Rational& t, const Rational& s);

/// (x^2 + y^2 + z^2)^2 + ((x + iy)^2 - z^2) w^2.
GaussRational quartic_form(const std::array<GaussRational, 4>& p);

struct QuarticReport {
    std::vector<Rational> t_values;
    std::vector<Rational> s_values;
    std::size_t points_checked = 0;
    std::vector<std::pair<Rational, Rational>> surface_failures;   // form does not vanish
    std::vector<Rational> line_failures;                           // t: points not collinear
    std::vector<Rational> circle_failures;                         // s: points off one plane or the sphere
    std::vector<Rational> degenerate_circles;                      // s whose curve spans only a line
    std::vector<std::pair<Rational, Rational>> incidence_failures; // (t, s): point missing from line or circle
    std::size_t verified_intersections = 0;
    std::size_t distinct_points = 0;

    bool ok() const {
        return surface_failures.empty() && line_failures.empty() && circle_failures.empty() &&
               incidence_failures.empty();
    }
};

/// Checks the parametrized quartic over Q(i): every point satisfies the form,
/// each t-curve is a line, each s-curve lies on a plane and on the complex
/// sphere x^2 + y^2 + z^2 = s x w, and the (t, s) point is on both curves.
/// Throws ContractError when a grid is empty or has repeated values.
QuarticReport complex_quartic_check(const std::vector<Rational>& T, const std::vector<Rational>& S);

}  // namespace ilab
