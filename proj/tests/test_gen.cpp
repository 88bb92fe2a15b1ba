#include <doctest.h>

#include <random>

#include "ilab/gen.hpp"
#include "ilab/incidence.hpp"
#include "support.hpp"

using namespace ilab;
using namespace testing_support;

TEST_CASE("distinct parameters") {
    const auto p = distinct_params(5);
    CHECK(p == std::vector<Rational>{0, 1, -1, 2, -2});
    CHECK(distinct_params(3, rational(1, 2)) == std::vector<Rational>{0, rational(1, 2), rational(-1, 2)});
}

TEST_CASE("hyperboloid generator") {
    const auto one = gen_hyperboloid(1, 1);
    CHECK(one.lines[0].p() == Vec3{1, 0, 0});
    CHECK(one.lines[0].direction() == Vec3{0, 1, 1});
    const auto rep = all_incidences(one);
    REQUIRE(rep.total_points() == 1);
    CHECK(rep.points[0].point == Point3::from_rational({1, 0, 0}));

    for (auto fam : {RulingFamily::first, RulingFamily::second, RulingFamily::both}) {
        const auto s = gen_hyperboloid(7, 5, fam);
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(contains(hyperboloid_poly(), curve_at(s, i)));
    }
    const auto s = gen_hyperboloid(4, 3);
    CHECK(all_incidences(s).total_points() == 12);
    CHECK(all_incidences(gen_hyperboloid(0, 5)).total_points() == 0);
    const auto both = gen_hyperboloid(4, 1, RulingFamily::both);
    CHECK(both.lines[2].direction()[2] == -1);
}

TEST_CASE("k x m incidences are pairwise distinct for one family") {
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t m = 1; m <= 6; ++m) {
            const auto s = gen_hyperboloid(k, m);
            const auto rep = all_incidences(s);
            CHECK(rep.total_points() == k * m);
            CHECK(approx_point_count(s) == k * m);
        }
    }
}

TEST_CASE("planar generator") {
    CHECK(gen_planar(0, 0).empty());
    CHECK(all_incidences(gen_planar(3, 0)).total_points() == 0);
    const auto s = gen_planar(6, 5);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(contains(Z(), curve_at(s, i)));
    const auto rep = all_incidences(s);
    for (const auto& ip : rep.points) CHECK(ip.lines.size() + ip.circles.size() <= 2);
    CHECK(rep.total_points() == approx_point_count(s));
}

TEST_CASE("planar pair with one circle crossing both lines") {
    const auto s = gen_planar(2, 1);
    CHECK(all_incidences(s).total_points() == 4);
}

TEST_CASE("generic generator is deterministic per seed") {
    CHECK(gen_generic(5, 5, 1) == gen_generic(5, 5, 1));
    CHECK(!(gen_generic(5, 5, 1) == gen_generic(5, 5, 2)));
    const auto s = gen_generic(20, 20, 1);
    CHECK(all_incidences(s).total_points() == approx_point_count(s));
}

TEST_CASE("transforms keep curves valid") {
    const auto s = gen_hyperboloid(3, 3);
    const auto t = translate(s, {1, 2, 3});
    CHECK(all_incidences(t).total_points() == 9);
    const auto r = rotate(s, {1, 2, 0, 1});
    CHECK(all_incidences(r).total_points() == 9);
    const auto k = scale(s, 3);
    CHECK(all_incidences(k).total_points() == 9);
    const auto m = merge(s, t);
    CHECK(m.lines.size() == 6);
    CHECK(m.circles.size() == 6);
    const Mat3 rot = rotation_matrix({1, 2, 0, 1});
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) CHECK(dot(rot[i], rot[j]) == (i == j ? 1 : 0));
    }
}

TEST_CASE("complex quartic parametrization") {
    // (t, s) = (1, 0): line point and circle point are both (0:0:0:4).
    const auto p = quartic_point(1, 0);
    CHECK(p[0].is_zero());
    CHECK(p[1].is_zero());
    CHECK(p[2].is_zero());
    CHECK(p[3] == GaussRational(4));

    std::mt19937_64 rng(25);
    for (int i = 0; i < 25; ++i) {
        const auto q = quartic_point(random_small(rng, 20, 9), random_small(rng, 20, 9));
        CHECK(quartic_form(q).is_zero());
    }
    // A point off the surface is detected.
    CHECK(!quartic_form({GaussRational(1), GaussRational(0), GaussRational(0), GaussRational(1)}).is_zero());
}

TEST_CASE("complex quartic check report") {
    const auto rep = complex_quartic_check(distinct_params(10), distinct_params(10));
    CHECK(rep.ok());
    CHECK(rep.verified_intersections == 100);
    CHECK(rep.points_checked == 100);
    // s = 0 is the one degenerate curve in this grid.
    CHECK(rep.degenerate_circles == std::vector<Rational>{0});

    const auto other = complex_quartic_check({rational(1, 2), 3, rational(-7, 5)}, {rational(2, 3), 5});
    CHECK(other.ok());
    CHECK(other.verified_intersections == 6);
    CHECK(other.distinct_points == 6);
    CHECK_THROWS(complex_quartic_check({}, {1}));
    CHECK_THROWS(complex_quartic_check({1, 1}, {1}));
}
