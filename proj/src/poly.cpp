#include "ilab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ilab/error.hpp"

namespace ilab {

std::vector<Exponent> monomial_basis(unsigned d) {
    std::vector<Exponent> out;
    for (int deg = static_cast<int>(d); deg >= 0; --deg) {
        for (int i = deg; i >= 0; --i) {
            for (int j = deg - i; j >= 0; --j) {
                out.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), static_cast<unsigned>(deg - i - j)});
            }
        }
    }
    return out;
}

std::size_t monomial_count(unsigned d) {
    const std::size_t n = d;
    return (n + 1) * (n + 2) * (n + 3) / 6;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    p.add_term({0, 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(int index) {
    MultiPoly p;
    Exponent e{0, 0, 0};
    e.at(static_cast<std::size_t>(index)) = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::from_basis(const std::vector<Exponent>& basis, const std::vector<Rational>& coeffs) {
    if (basis.size() != coeffs.size()) throw ContractError("from_basis: size mismatch");
    MultiPoly p;
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

Rational MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::eval(const Vec3& p) const {
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < 3; ++v) {
            for (unsigned k = 0; k < e[v]; ++k) term *= p[v];
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::canonical() const {
    if (terms_.empty()) return *this;
    Integer den = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    for (const auto& [e, c] : terms_) {
        Integer n = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (terms_.begin()->second < 0) g = -g;
    const Rational scale = Rational(den) / Rational(g);
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        Rational v = c * scale;
        v.canonicalize();
        out.terms_.emplace(e, v);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    static const char* names[] = {"x", "y", "z"};
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1 && total_degree(e) > 0;
        if (!unit) os << mag.get_str();
        bool need_star = !unit;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (need_star) os << "*";
            os << names[v];
            if (e[v] > 1) os << "^" << e[v];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
    if (s == 0) return {};
    MultiPoly out = a;
    for (auto& [e, c] : out.terms_) c *= s;
    return out;
}

std::strong_ordering structural_cmp(const MultiPoly& a, const MultiPoly& b) {
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    const GradedLexGreater greater;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) {
            return greater(ia->first, ib->first) ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (auto c = cmp(ia->second, ib->second); c != 0) {
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    if (ia == a.terms_.end() && ib == b.terms_.end()) return std::strong_ordering::equal;
    return ia == a.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    return (Rational(1) / lead()) * (*this);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ContractError("UniPoly: division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    if (rem.size() < b.c_.size()) return {UniPoly{}, a};
    std::vector<Rational> quo(rem.size() - b.c_.size() + 1);
    const Rational& lb = b.lead();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational f = rem[k + b.c_.size() - 1] / lb;
        quo[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------- real roots

namespace {

int sign_at_infinity(const UniPoly& p, bool negative) {
    int s = sgn(p.lead());
    if (negative && p.degree() % 2 == 1) s = -s;
    return s;
}

long variations(const std::vector<UniPoly>& seq, bool negative) {
    long count = 0;
    int prev = 0;
    for (const auto& p : seq) {
        const int s = sign_at_infinity(p, negative);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

long tarski_query(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero()) throw ContractError("tarski_query: zero polynomial");
    std::vector<UniPoly> seq{p, p.derivative() * q};
    while (!seq.back().is_zero()) {
        const auto& a = seq[seq.size() - 2];
        const auto& b = seq.back();
        seq.push_back(Rational(-1) * UniPoly::divmod(a, b).second);
    }
    seq.pop_back();
    return variations(seq, true) - variations(seq, false);
}

long count_real_roots(const UniPoly& p) { return tarski_query(p, UniPoly({Rational(1)})); }

// ---------------------------------------------------------------- restriction

namespace {

// Powers L^0..L^d of a univariate linear form a + b t.
std::vector<UniPoly> linear_powers(const Rational& a, const Rational& b, unsigned d) {
    std::vector<UniPoly> pw;
    pw.reserve(d + 1);
    pw.emplace_back(std::vector<Rational>{Rational(1)});
    const UniPoly lin({a, b});
    for (unsigned k = 1; k <= d; ++k) pw.push_back(pw.back() * lin);
    return pw;
}

unsigned max_degree(const std::vector<Exponent>& basis) {
    unsigned d = 0;
    for (const auto& e : basis) d = std::max(d, total_degree(e));
    return d;
}

// Dense bivariate polynomial in (u, v): coefficient [a][b] multiplies u^a v^b.
using Bi = std::vector<std::vector<Rational>>;

Bi bi_zero(unsigned d) { return Bi(d + 1, std::vector<Rational>(d + 1)); }

Bi bi_mul(const Bi& p, const Bi& q, unsigned d) {
    Bi r = bi_zero(d);
    for (unsigned a = 0; a <= d; ++a) {
        for (unsigned b = 0; a + b <= d; ++b) {
            if (p[a][b] == 0) continue;
            for (unsigned c = 0; a + c <= d; ++c) {
                for (unsigned e = 0; a + b + c + e <= d; ++e) {
                    if (q[c][e] != 0) r[a + c][b + e] += p[a][b] * q[c][e];
                }
            }
        }
    }
    return r;
}

CircleRemainder reduce_bi(Bi p, unsigned d, const Rational& alpha, const Rational& beta, const Rational& r2) {
    // u^2 = (r2 - beta v^2) / alpha; the total degree a + b never grows.
    const Rational k0 = r2 / alpha;
    const Rational k2 = -beta / alpha;
    for (unsigned a = d; a >= 2; --a) {
        for (unsigned b = 0; a + b <= d; ++b) {
            if (p[a][b] == 0) continue;
            const Rational c = p[a][b];
            p[a][b] = 0;
            p[a - 2][b] += c * k0;
            p[a - 2][b + 2] += c * k2;
        }
    }
    CircleRemainder out;
    out.r0 = UniPoly(p[0]);
    if (d >= 1) out.r1 = UniPoly(p[1]);
    return out;
}

struct CircleFrame {
    std::array<Bi, 3> coord;  // x, y, z as linear forms in (u, v)
    Rational alpha, beta;
};

CircleFrame circle_frame(const Circle& c, unsigned d) {
    const auto f = plane_frame(c.normal());
    CircleFrame out;
    for (int i = 0; i < 3; ++i) {
        Bi lin = bi_zero(std::max(d, 1u));
        lin[0][0] = c.center()[i];
        lin[1][0] = f.e1[i];
        lin[0][1] = f.e2[i];
        out.coord[i] = std::move(lin);
    }
    out.alpha = dot(f.e1, f.e1);
    out.beta = dot(f.e2, f.e2);
    return out;
}

}  // namespace

std::vector<UniPoly> restrict_monomials(const std::vector<Exponent>& basis, const Line& l) {
    const unsigned d = max_degree(basis);
    const Vec3 dir = l.direction();
    std::array<std::vector<UniPoly>, 3> pw;
    for (int i = 0; i < 3; ++i) pw[i] = linear_powers(l.p()[i], dir[i], d);
    std::vector<UniPoly> out;
    out.reserve(basis.size());
    for (const auto& e : basis) out.push_back(pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
    return out;
}

std::vector<CircleRemainder> reduce_monomials(const std::vector<Exponent>& basis, const Circle& c) {
    const unsigned d = max_degree(basis);
    const unsigned dd = std::max(d, 1u);
    const auto frame = circle_frame(c, dd);
    std::array<std::vector<Bi>, 3> pw;
    for (int i = 0; i < 3; ++i) {
        Bi one = bi_zero(dd);
        one[0][0] = 1;
        pw[i].push_back(std::move(one));
        for (unsigned k = 1; k <= d; ++k) pw[i].push_back(bi_mul(pw[i].back(), frame.coord[i], dd));
    }
    std::vector<CircleRemainder> out;
    out.reserve(basis.size());
    for (const auto& e : basis) {
        Bi m = bi_mul(bi_mul(pw[0][e[0]], pw[1][e[1]], dd), pw[2][e[2]], dd);
        out.push_back(reduce_bi(std::move(m), dd, frame.alpha, frame.beta, c.r2()));
    }
    return out;
}

UniPoly restrict_to_line(const MultiPoly& poly, const Line& l) {
    std::vector<Exponent> basis;
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : poly.terms()) {
        basis.push_back(e);
        coeffs.push_back(c);
    }
    const auto parts = restrict_monomials(basis, l);
    UniPoly sum;
    for (std::size_t i = 0; i < parts.size(); ++i) sum = sum + coeffs[i] * parts[i];
    return sum;
}

CircleRemainder reduce_on_circle(const MultiPoly& poly, const Circle& c) {
    std::vector<Exponent> basis;
    std::vector<Rational> coeffs;
    for (const auto& [e, k] : poly.terms()) {
        basis.push_back(e);
        coeffs.push_back(k);
    }
    const auto parts = reduce_monomials(basis, c);
    CircleRemainder sum;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        sum.r0 = sum.r0 + coeffs[i] * parts[i].r0;
        sum.r1 = sum.r1 + coeffs[i] * parts[i].r1;
    }
    return sum;
}

std::vector<Rational> CircleRemainder::flatten(unsigned d) const {
    std::vector<Rational> out;
    out.reserve(2 * d + 1);
    for (unsigned i = 0; i <= d; ++i) out.push_back(r0.coeff(i));
    for (unsigned i = 0; i < d; ++i) out.push_back(r1.coeff(i));
    return out;
}

bool contains(const MultiPoly& poly, const Line& l) { return restrict_to_line(poly, l).is_zero(); }
bool contains(const MultiPoly& poly, const Circle& c) { return reduce_on_circle(poly, c).is_zero(); }

bool contains(const MultiPoly& poly, const CurveRef& curve) {
    return std::visit([&](const auto* cv) { return contains(poly, *cv); }, curve);
}

std::optional<long> intersection_count(const MultiPoly& poly, const Line& l) {
    const UniPoly f = restrict_to_line(poly, l);
    if (f.is_zero()) return std::nullopt;
    return count_real_roots(f);
}

std::optional<long> intersection_count(const MultiPoly& poly, const Circle& c) {
    const CircleRemainder rem = reduce_on_circle(poly, c);
    if (rem.is_zero()) return std::nullopt;
    const auto f = plane_frame(c.normal());
    const Rational alpha = dot(f.e1, f.e1);
    const Rational beta = dot(f.e2, f.e2);
    // s(v) = alpha u^2 on the circle; a root v of the u-free part with
    // s(v) > 0 carries two points (u = +-), with s(v) = 0 one point.
    const UniPoly s({c.r2(), Rational(0), -beta});
    auto points_over = [&](const UniPoly& h) -> long {
        if (h.is_zero()) throw AlgorithmError("intersection_count: degenerate remainder");
        const long all = count_real_roots(h);
        const long tq = tarski_query(h, s);
        const long tq2 = tarski_query(h, s * s);
        const long positive = (tq + tq2) / 2;
        const long zero = all - tq2;
        return 2 * positive + zero;
    };
    if (rem.r1.is_zero()) return points_over(rem.r0);
    const UniPoly g = alpha * (rem.r0 * rem.r0) + (UniPoly({-c.r2(), Rational(0), beta}) * rem.r1 * rem.r1);
    const UniPoly h = UniPoly::gcd(rem.r0, rem.r1);
    const long off = count_real_roots(g) - (h.degree() > 0 ? count_real_roots(h) : 0);
    const long on = h.degree() > 0 ? points_over(h) : 0;
    return off + on;
}

}  // namespace ilab
