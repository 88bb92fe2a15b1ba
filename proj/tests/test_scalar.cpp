#include <doctest.h>

#include <random>

#include "ilab/error.hpp"
#include "ilab/scalar.hpp"

using namespace ilab;

TEST_CASE("parse and print rationals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-4/6") == rational(-2, 3));
    CHECK(parse_rational("+5/10") == rational(1, 2));
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(rational(-2, 4)) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
}

TEST_CASE("round trip through text") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Rational q = rational(static_cast<long>(rng() % 20001) - 10000, static_cast<long>(rng() % 997) + 1);
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("floor and ceil") {
    CHECK(floor_of(rational(7, 2)) == 3);
    CHECK(ceil_of(rational(7, 2)) == 4);
    CHECK(floor_of(rational(-7, 2)) == -4);
    CHECK(ceil_of(rational(-7, 2)) == -3);
    CHECK(ceil_of(Rational(5)) == 5);
}

TEST_CASE("factorization matches trial division") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        const unsigned long n = rng() % 2000000 + 1;
        std::map<Integer, unsigned> naive;
        unsigned long m = n;
        for (unsigned long p = 2; p * p <= m; ++p) {
            while (m % p == 0) {
                ++naive[Integer(p)];
                m /= p;
            }
        }
        if (m > 1) ++naive[Integer(m)];
        CHECK(factorize(Integer(n)) == naive);
    }
    const Integer big = Integer("1000000007") * Integer("998244353") * 12;
    const auto f = factorize(big);
    CHECK(f.at(Integer(2)) == 2);
    CHECK(f.at(Integer(3)) == 1);
    CHECK(f.at(Integer("1000000007")) == 1);
    CHECK(f.at(Integer("998244353")) == 1);
}

TEST_CASE("squarefree split") {
    auto s = squarefree_split(Integer(72));
    CHECK(s.square == 6);
    CHECK(s.free == 2);
    s = squarefree_split(Integer(49));
    CHECK(s.square == 7);
    CHECK(s.free == 1);
}

TEST_CASE("quadratic extension canonical form") {
    const QuadExt x = QuadExt::normalize(0, 1, 8);
    CHECK(x.b() == 2);
    CHECK(x.d() == 2);
    const QuadExt y = QuadExt::normalize(1, 1, 4);
    CHECK(y.is_rational());
    CHECK(y.a() == 3);
    CHECK(QuadExt::normalize(1, 1, rational(1, 2)) == QuadExt::normalize(1, rational(1, 2), 2));
    CHECK_THROWS_AS(QuadExt::normalize(0, 1, -1), ContractError);
    CHECK_THROWS_AS(QuadExt::from_parts(0, 1, Integer(4)), ContractError);
}

TEST_CASE("quadratic extension arithmetic") {
    const QuadExt a = QuadExt::normalize(1, 1, 2);
    const QuadExt b = a.conjugate();
    CHECK(a * b == QuadExt(-1));
    CHECK(a + b == QuadExt(2));
    CHECK((a / a) == QuadExt(1));
    CHECK((a * a) == QuadExt::normalize(3, 2, 2));
    CHECK((QuadExt(1) / a) == QuadExt::normalize(-1, 1, 2));
    CHECK_THROWS(a + QuadExt::normalize(0, 1, 3));
    CHECK((a + QuadExt(rational(1, 2))).to_string() == "3/2+1/1*sqrt(2)");
}

TEST_CASE("exact sign agrees with 256-bit floats") {
    std::mt19937_64 rng(11);
    mpf_set_default_prec(256);
    for (int i = 0; i < 2000; ++i) {
        const Rational a = rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 50) + 1);
        const Rational b = rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 50) + 1);
        const long r = static_cast<long>(rng() % 500);
        const QuadExt x = QuadExt::normalize(a, b, r);
        const mpf_class approx = mpf_class(a) + mpf_class(b) * sqrt(mpf_class(r));
        const int expected = approx > 1e-60 ? 1 : (approx < -1e-60 ? -1 : 0);
        CHECK(x.sign() == expected);
    }
    // Nearly cancelling: 99/70 and 577/408 are convergents of sqrt(2), both above it.
    CHECK(QuadExt::normalize(rational(-99, 70), 1, 2).sign() == -1);
    CHECK(QuadExt::normalize(rational(-577, 408), 1, 2).sign() == -1);
}

TEST_CASE("imaginary quadratic and gaussian rationals") {
    const ImagQuad i = ImagQuad::normalize(0, 1, 1);
    CHECK(i * i == ImagQuad(-1));
    const ImagQuad w = ImagQuad::normalize(1, 1, 12);  // 1 + 2 sqrt(-3)
    CHECK(w.im() == 2);
    CHECK(w.f() == 3);
    CHECK(w * w.conjugate() == ImagQuad(13));
    CHECK((w / w) == ImagQuad(1));
    const GaussRational g{Rational(1), Rational(2)};
    CHECK(g * g.conjugate() == GaussRational(5));
    CHECK(g.norm() == 5);
    CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));
    CHECK((g / g) == GaussRational(1));
}
