#include "ilab/scalar.hpp"

#include <cmath>
#include <vector>

#include "ilab/error.hpp"

namespace ilab {

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return ParseError("malformed rational \"" + std::string(text) + "\""); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    auto is_int = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    auto to_mpz = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return Integer(std::string(s), 10);
    };
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw bad();
        return Rational(to_mpz(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw bad();
    Integer d = to_mpz(den);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational q(to_mpz(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

Rational rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long c) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    auto step = [&](const Integer& x) -> Integer {
        Integer y = x * x + c;
        mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
        return y;
    };
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 64;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < m && i < r - k; ++i) {
                y = step(y);
                Integer diff = abs(x - y);
                q = (q * diff) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = step(ys);
            Integer diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer root = sqrt(n);
        std::map<Integer, unsigned> half;
        factor_into(root, half);
        for (const auto& [p, e] : half) out[p] += 2 * e;
        return;
    }
    for (unsigned long c = 1;; ++c) {
        Integer g = pollard_brent(n, c);
        if (g != n && g != 1) {
            factor_into(g, out);
            factor_into(Integer(n / g), out);
            return;
        }
    }
}

}  // namespace

std::map<Integer, unsigned> factorize(const Integer& n) {
    if (n <= 0) throw ContractError("factorize: argument must be positive");
    std::map<Integer, unsigned> out;
    Integer m = n;
    for (unsigned long p = 2; p < 1000; ++p) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        out[Integer(p)] = e;
    }
    factor_into(m, out);
    return out;
}

SquarefreeSplit squarefree_split(const Integer& n) {
    SquarefreeSplit s{1, 1};
    for (const auto& [p, e] : factorize(n)) {
        for (unsigned i = 0; i < e / 2; ++i) s.square *= p;
        if (e % 2 == 1) s.free *= p;
    }
    return s;
}

// ---------------------------------------------------------------- QuadExt

namespace {

// sqrt(r) = coeff * sqrt(free), r >= 0 rational.
struct RootSplit {
    Rational coeff;
    Integer free;
};

RootSplit split_root(const Rational& r) {
    if (r == 0) return {Rational(0), Integer(1)};
    const Integer pq = r.get_num() * r.get_den();
    const auto s = squarefree_split(pq);
    Rational coeff(s.square, r.get_den());
    coeff.canonicalize();
    return {coeff, s.free};
}

Integer common_field(const QuadExt& x, const QuadExt& y) {
    if (x.b() == 0) return y.d();
    if (y.b() == 0) return x.d();
    if (x.d() != y.d()) throw ContractError("incommensurable fields");
    return x.d();
}

}  // namespace

QuadExt QuadExt::normalize(const Rational& a, const Rational& b, const Rational& r) {
    if (r < 0) throw ContractError("QuadExt: negative radicand");
    QuadExt out;
    const auto root = split_root(r);
    const Rational coeff = b * root.coeff;
    if (coeff == 0 || root.free == 1) {
        out.a_ = a + coeff;
        return out;
    }
    out.a_ = a;
    out.b_ = coeff;
    out.d_ = root.free;
    return out;
}

QuadExt QuadExt::from_parts(const Rational& a, const Rational& b, const Integer& d) {
    if (b == 0) {
        if (d != 1) throw ContractError("QuadExt: rational value must carry d = 1");
        return QuadExt(a);
    }
    if (d <= 1 || squarefree_split(d).square != 1) {
        throw ContractError("QuadExt: radicand must be squarefree and > 1");
    }
    QuadExt out;
    out.a_ = a;
    out.b_ = b;
    out.d_ = d;
    return out;
}

int QuadExt::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    return lhs > rhs ? sa : sb;
}

QuadExt QuadExt::conjugate() const {
    QuadExt out = *this;
    out.b_ = -b_;
    return out;
}

double QuadExt::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadExt::to_string() const {
    if (b_ == 0) return ilab::to_string(a_);
    return ilab::to_string(a_) + "+" + ilab::to_string(b_) + "*sqrt(" + d_.get_str() + ")";
}

QuadExt QuadExt::operator-() const {
    QuadExt out = *this;
    out.a_ = -a_;
    out.b_ = -b_;
    return out;
}

QuadExt QuadExt::unchecked(const Rational& a, const Rational& b, const Integer& d) {
    QuadExt out;
    out.a_ = a;
    out.b_ = b;
    out.d_ = b == 0 ? Integer(1) : d;
    return out;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    const Integer d = common_field(x, y);
    return QuadExt::unchecked(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    const Integer d = common_field(x, y);
    return QuadExt::unchecked(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const Integer d = common_field(x, y);
    return QuadExt::unchecked(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw ContractError("QuadExt: division by zero");
    const Integer d = common_field(x, y);
    const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
    const QuadExt num = x * y.conjugate();
    return QuadExt::unchecked(num.a_ / norm, num.b_ / norm, d);
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering structural_cmp(const QuadExt& x, const QuadExt& y) {
    if (auto c = cmp(x.d_, y.d_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = cmp(x.a_, y.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = cmp(x.b_, y.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int compare(const QuadExt& x, const QuadExt& y) { return (x - y).sign(); }

// ---------------------------------------------------------------- ImagQuad

ImagQuad ImagQuad::normalize(const Rational& re, const Rational& im, const Rational& r) {
    if (r <= 0) throw ContractError("ImagQuad: radicand of sqrt(-r) must have r > 0");
    const auto root = split_root(r);
    ImagQuad out;
    out.re_ = re;
    out.im_ = im * root.coeff;
    out.f_ = out.im_ == 0 ? Integer(1) : root.free;
    return out;
}

namespace {
Integer common_field(const ImagQuad& x, const ImagQuad& y) {
    if (x.im() == 0) return y.f();
    if (y.im() == 0) return x.f();
    if (x.f() != y.f()) throw ContractError("incommensurable fields");
    return x.f();
}

}  // namespace

ImagQuad ImagQuad::unchecked(const Rational& re, const Rational& im, const Integer& f) {
    ImagQuad out;
    out.re_ = re;
    out.im_ = im;
    out.f_ = im == 0 ? Integer(1) : f;
    return out;
}

ImagQuad ImagQuad::conjugate() const {
    ImagQuad out = *this;
    out.im_ = -im_;
    return out;
}

std::string ImagQuad::to_string() const {
    if (im_ == 0) return ilab::to_string(re_);
    return ilab::to_string(re_) + "+" + ilab::to_string(im_) + "*sqrt(-" + f_.get_str() + ")";
}

ImagQuad ImagQuad::operator-() const {
    ImagQuad out = *this;
    out.re_ = -re_;
    out.im_ = -im_;
    return out;
}

ImagQuad operator+(const ImagQuad& x, const ImagQuad& y) {
    return ImagQuad::unchecked(x.re_ + y.re_, x.im_ + y.im_, common_field(x, y));
}

ImagQuad operator-(const ImagQuad& x, const ImagQuad& y) {
    return ImagQuad::unchecked(x.re_ - y.re_, x.im_ - y.im_, common_field(x, y));
}

ImagQuad operator*(const ImagQuad& x, const ImagQuad& y) {
    const Integer f = common_field(x, y);
    return ImagQuad::unchecked(x.re_ * y.re_ - x.im_ * y.im_ * Rational(f), x.re_ * y.im_ + x.im_ * y.re_, f);
}

ImagQuad operator/(const ImagQuad& x, const ImagQuad& y) {
    if (y.is_zero()) throw ContractError("ImagQuad: division by zero");
    const Integer f = common_field(x, y);
    const Rational norm = y.re_ * y.re_ + y.im_ * y.im_ * Rational(f);
    const ImagQuad num = x * y.conjugate();
    return ImagQuad::unchecked(num.re_ / norm, num.im_ / norm, f);
}

bool operator==(const ImagQuad& x, const ImagQuad& y) {
    return x.f_ == y.f_ && x.re_ == y.re_ && x.im_ == y.im_;
}

std::strong_ordering structural_cmp(const ImagQuad& x, const ImagQuad& y) {
    auto ord = [](int c) { return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater; };
    if (auto c = cmp(x.f_, y.f_); c != 0) return ord(c);
    if (auto c = cmp(x.re_, y.re_); c != 0) return ord(c);
    if (auto c = cmp(x.im_, y.im_); c != 0) return ord(c);
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- GaussRational

std::string GaussRational::to_string() const {
    return ilab::to_string(re) + "+" + ilab::to_string(im) + "i";
}

GaussRational operator/(const GaussRational& x, const GaussRational& y) {
    if (y.is_zero()) throw ContractError("GaussRational: division by zero");
    const Rational n = y.norm();
    const GaussRational num = x * y.conjugate();
    return {num.re / n, num.im / n};
}

}  // namespace ilab
