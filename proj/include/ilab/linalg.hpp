#pragma once

#include <cstddef>
#include <vector>

#include "ilab/scalar.hpp"

namespace ilab {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

/// Row-echelon form from fraction-free (Bareiss) elimination. Rows are scaled
/// to integers first; every entry stays an integer minor of the input.
struct Echelon {
    std::vector<std::vector<Integer>> rows;  // rank rows, each of width `cols`
    std::vector<std::size_t> pivots;         // pivot column per row, increasing
    std::size_t cols = 0;

    std::size_t rank() const { return pivots.size(); }
};

Echelon bareiss_echelon(const RatMatrix& m, std::size_t cols);

/// Exact kernel basis. One vector per free column f (in increasing order),
/// with v[f] = 1 and v[g] = 0 for the other free columns, i.e. the basis read
/// off the reduced echelon form. Empty when the columns are independent.
std::vector<RatVector> nullspace(const RatMatrix& m, std::size_t cols);

std::size_t rank(const RatMatrix& m, std::size_t cols);

RatVector multiply(const RatMatrix& m, const RatVector& v);

}  // namespace ilab
