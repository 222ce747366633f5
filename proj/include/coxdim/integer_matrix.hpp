#pragma once

#include <map>
#include <utility>

#include "coxdim/base.hpp"

namespace coxdim {

/// Sparse integer matrix over Z with arbitrary-precision entries.
/// Zero entries are never stored.
class IntegerMatrix {
public:
    IntegerMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    void set(int r, int c, const Integer& v);
    void add(int r, int c, const Integer& v);
    Integer get(int r, int c) const;

    const std::map<std::pair<int, int>, Integer>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    /// Matrix product (small inputs only; used by tests for d(d(x)) = 0).
    IntegerMatrix multiply(const IntegerMatrix& other) const;

private:
    void check_index(int r, int c) const;

    int rows_;
    int cols_;
    std::map<std::pair<int, int>, Integer> entries_;
};

}  // namespace coxdim
