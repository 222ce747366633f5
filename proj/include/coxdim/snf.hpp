#pragma once

#include <vector>

#include "coxdim/integer_matrix.hpp"

namespace coxdim {

/// Smith normal form summary: the positive invariant factors d_1 | d_2 | ...
/// (ones included) and the rank, which equals divisors.size().
struct SnfResult {
    std::vector<Integer> divisors;
    int rank = 0;
};

/// Smith normal form by sparse integer elimination.  Pivots prefer unit
/// entries and low Markowitz fill; non-unit pivots fall back to Euclidean
/// row/column reduction.  All arithmetic is arbitrary precision.
SnfResult smith_normal_form(const IntegerMatrix& m);

}  // namespace coxdim
