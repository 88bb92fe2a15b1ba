#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ilab/geom.hpp"
#include "ilab/scalar.hpp"

namespace ilab {

/// Exponents of x, y, z.
using Exponent = std::array<unsigned, 3>;

inline unsigned total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

/// Graded lexicographic order with x > y > z; "greater" sorts leading terms first.
struct GradedLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// All monomials of total degree <= d, leading monomial first.
std::vector<Exponent> monomial_basis(unsigned d);

/// Number of monomials of degree <= d in three variables, C(d+3, 3).
std::size_t monomial_count(unsigned d);

/// Sparse polynomial in x, y, z over Q. Zero coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GradedLexGreater>;

    MultiPoly() = default;
    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(int index);
    /// Polynomial with coefficients `coeffs` on `basis` (parallel arrays).
    static MultiPoly from_basis(const std::vector<Exponent>& basis, const std::vector<Rational>& coeffs);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    Rational eval(const Vec3& p) const;

    /// Scaled to coprime integer coefficients with a positive leading coefficient.
    MultiPoly canonical() const;

    std::string to_string() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& s, const MultiPoly& a);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    /// Term-by-term order in graded-lex sequence; used as a deterministic tie-break.
    friend std::strong_ordering structural_cmp(const MultiPoly& a, const MultiPoly& b);

private:
    Terms terms_;
};

/// Dense univariate polynomial, coefficient i multiplies t^i. Trimmed: no
/// trailing zero coefficients, so the zero polynomial is empty.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational eval(const Rational& t) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& a);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Euclidean division; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    static UniPoly gcd(UniPoly a, UniPoly b);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Tarski query: #{real roots x of p : q(x) > 0} - #{... : q(x) < 0}. With
/// q = 1 this counts the distinct real roots of p. p must be nonzero.
long tarski_query(const UniPoly& p, const UniPoly& q);
long count_real_roots(const UniPoly& p);

/// Q restricted to the affine parametrization p + t (q - p) of the line.
UniPoly restrict_to_line(const MultiPoly& poly, const Line& l);

/// Remainder r0(v) + u r1(v) of Q, written in plane coordinates
/// x = center + u e1 + v e2, modulo |e1|^2 u^2 + |e2|^2 v^2 - r2.
struct CircleRemainder {
    UniPoly r0;
    UniPoly r1;
    bool is_zero() const { return r0.is_zero() && r1.is_zero(); }
    /// The 2d+1 coefficients r0_0..r0_d, r1_0..r1_{d-1}.
    std::vector<Rational> flatten(unsigned d) const;
};
CircleRemainder reduce_on_circle(const MultiPoly& poly, const Circle& c);

/// Per-monomial restrictions for a basis, used to assemble linear constraints.
std::vector<UniPoly> restrict_monomials(const std::vector<Exponent>& basis, const Line& l);
std::vector<CircleRemainder> reduce_monomials(const std::vector<Exponent>& basis, const Circle& c);

bool contains(const MultiPoly& poly, const Line& l);
bool contains(const MultiPoly& poly, const Circle& c);
bool contains(const MultiPoly& poly, const CurveRef& curve);

/// Number of distinct real points of Z(Q) on the curve, or nullopt when the
/// curve lies on Z(Q).
std::optional<long> intersection_count(const MultiPoly& poly, const Line& l);
std::optional<long> intersection_count(const MultiPoly& poly, const Circle& c);

}  // namespace ilab
