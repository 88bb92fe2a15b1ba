#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace ilab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num", "num/den" (optionally signed). Throws ParseError on malformed
/// input or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Serializes as "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);

int sign(const Rational& q);
int sign(const Integer& z);

Rational rational(long num, long den = 1);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Prime factorization with multiplicities. Trial division for small primes,
/// Pollard-Brent for the rest. `n` must be positive.
std::map<Integer, unsigned> factorize(const Integer& n);

/// n = square * square * free with `free` squarefree. n must be positive.
struct SquarefreeSplit {
    Integer square;
    Integer free;
};
SquarefreeSplit squarefree_split(const Integer& n);

/// Element a + b*sqrt(d) of a real quadratic field. Canonical: d is squarefree
/// and > 1 whenever b != 0, and d == 1 whenever b == 0.
class QuadExt {
public:
    QuadExt() : d_(1) {}
    QuadExt(const Rational& a) : a_(a), d_(1) {}  // NOLINT(google-explicit-constructor)
    QuadExt(long a) : a_(a), d_(1) {}             // NOLINT(google-explicit-constructor)

    /// Canonical form of a + b*sqrt(r), r >= 0.
    static QuadExt normalize(const Rational& a, const Rational& b, const Rational& r);

    /// Builds from already-canonical parts; validates the invariants.
    static QuadExt from_parts(const Rational& a, const Rational& b, const Integer& d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Exact sign of a + b*sqrt(d), decided by comparing a^2 against b^2 d.
    int sign() const;

    QuadExt conjugate() const;
    double to_double() const;
    std::string to_string() const;

    QuadExt operator-() const;
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

    /// Structural equality; equals value equality because the form is canonical.
    friend bool operator==(const QuadExt& x, const QuadExt& y);

    /// Total structural order (d, then a, then b). Used for dedup keys, not
    /// for numeric comparison.
    friend std::strong_ordering structural_cmp(const QuadExt& x, const QuadExt& y);

    /// Numeric comparison; operands must share a field.
    friend int compare(const QuadExt& x, const QuadExt& y);

private:
    static QuadExt unchecked(const Rational& a, const Rational& b, const Integer& d);

    Rational a_;
    Rational b_;
    Integer d_;
};

/// Element re + im*sqrt(-f) of an imaginary quadratic field, f >= 1 squarefree
/// (f == 1 whenever im == 0). With f == 1 these are Gaussian rationals.
class ImagQuad {
public:
    ImagQuad() : f_(1) {}
    ImagQuad(const Rational& re) : re_(re), f_(1) {}  // NOLINT(google-explicit-constructor)
    /// re + im*sqrt(-r) for r > 0 rational.
    static ImagQuad normalize(const Rational& re, const Rational& im, const Rational& r);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Integer& f() const { return f_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }

    ImagQuad conjugate() const;
    std::string to_string() const;

    ImagQuad operator-() const;
    friend ImagQuad operator+(const ImagQuad& x, const ImagQuad& y);
    friend ImagQuad operator-(const ImagQuad& x, const ImagQuad& y);
    friend ImagQuad operator*(const ImagQuad& x, const ImagQuad& y);
    friend ImagQuad operator/(const ImagQuad& x, const ImagQuad& y);
    friend bool operator==(const ImagQuad& x, const ImagQuad& y);
    friend std::strong_ordering structural_cmp(const ImagQuad& x, const ImagQuad& y);

private:
    static ImagQuad unchecked(const Rational& re, const Rational& im, const Integer& f);

    Rational re_;
    Rational im_;
    Integer f_;
};

/// re + im*i with rational parts.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(const Rational& r) : re(r) {}  // NOLINT(google-explicit-constructor)
    GaussRational(long r) : re(r) {}             // NOLINT(google-explicit-constructor)
    GaussRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRational conjugate() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    std::string to_string() const;

    GaussRational operator-() const { return {-re, -im}; }
    friend GaussRational operator+(const GaussRational& x, const GaussRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussRational operator-(const GaussRational& x, const GaussRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussRational operator*(const GaussRational& x, const GaussRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussRational operator/(const GaussRational& x, const GaussRational& y);
    GaussRational& operator+=(const GaussRational& y) { return *this = *this + y; }
    GaussRational& operator*=(const GaussRational& y) { return *this = *this * y; }
    friend bool operator==(const GaussRational& x, const GaussRational& y) {
        return x.re == y.re && x.im == y.im;
    }
};

}  // namespace ilab
