#include "coxdim/integer_matrix.hpp"

namespace coxdim {

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("IntegerMatrix: negative dimension");
}

void IntegerMatrix::check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw InputError("IntegerMatrix: index out of range");
}

void IntegerMatrix::set(int r, int c, const Integer& v) {
    check_index(r, c);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void IntegerMatrix::add(int r, int c, const Integer& v) {
    check_index(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        if (v != 0) entries_.emplace(std::make_pair(r, c), v);
        return;
    }
    it->second += v;
    if (it->second == 0) entries_.erase(it);
}

Integer IntegerMatrix::get(int r, int c) const {
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Integer(0) : it->second;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("IntegerMatrix: shape mismatch in multiply");
    IntegerMatrix out(rows_, other.cols_);
    for (const auto& [rc, v] : entries_) {
        for (int j = 0; j < other.cols_; ++j) {
            const Integer w = other.get(rc.second, j);
            if (w != 0) out.add(rc.first, j, v * w);
        }
    }
    return out;
}

}  // namespace coxdim
