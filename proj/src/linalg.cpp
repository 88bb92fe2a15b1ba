#include "ilab/linalg.hpp"

#include <utility>

#include "ilab/error.hpp"

namespace ilab {

Echelon bareiss_echelon(const RatMatrix& m, std::size_t cols) {
    std::vector<std::vector<Integer>> a;
    a.reserve(m.size());
    for (const auto& row : m) {
        if (row.size() != cols) throw ContractError("bareiss_echelon: ragged matrix");
        Integer den = 1;
        for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> r(cols);
        bool nonzero = false;
        for (std::size_t j = 0; j < cols; ++j) {
            r[j] = row[j].get_num() * (den / row[j].get_den());
            nonzero = nonzero || r[j] != 0;
        }
        if (nonzero) a.push_back(std::move(r));
    }

    Echelon out;
    out.cols = cols;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            const Integer lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = piv * a[i][j] - lead * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::vector<RatVector> nullspace(const RatMatrix& m, std::size_t cols) {
    const Echelon e = bareiss_echelon(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols);
        v[f] = 1;
        for (std::size_t i = e.rank(); i-- > 0;) {
            const auto& row = e.rows[i];
            const std::size_t pc = e.pivots[i];
            Rational acc;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (row[j] != 0 && v[j] != 0) acc += Rational(row[j]) * v[j];
            }
            v[pc] = -acc / Rational(row[pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const RatMatrix& m, std::size_t cols) { return bareiss_echelon(m, cols).rank(); }

RatVector multiply(const RatMatrix& m, const RatVector& v) {
    RatVector out;
    out.reserve(m.size());
    for (const auto& row : m) {
        if (row.size() != v.size()) throw ContractError("multiply: dimension mismatch");
        Rational acc;
        for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
        out.push_back(acc);
    }
    return out;
}

}  // namespace ilab
