#include "coxdim/snf.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "coxdim/abelian.hpp"

namespace coxdim {

namespace {

int sign_of(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Quotient with remainder of minimal absolute value, |rem| <= |b|/2.
void divmod_nearest(const Integer& a, const Integer& b, Integer& q, Integer& rem) {
    q = a / b;
    rem = a - q * b;
    if (rem != 0 && 2 * boost::multiprecision::abs(rem) > boost::multiprecision::abs(b)) {
        const int s = sign_of(rem) * sign_of(b);
        q += s;
        rem -= s * b;
    }
}

std::size_t bits_of(const Integer& v) {
    return v == 0 ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

using SparseRow = std::vector<std::pair<int, Integer>>;  // sorted by column

// Sparse elimination state for the unit-pivot phase.
struct EliminationState {
    std::vector<SparseRow> rows;
    std::vector<std::set<int>> col_rows;
    std::vector<char> row_alive;
    std::vector<char> col_alive;

    // row[dst] += coef * row[src]
    void row_axpy(int dst, int src, const Integer& coef) {
        const SparseRow& a = rows[dst];
        const SparseRow& b = rows[src];
        SparseRow out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                Integer v = coef * b[j].second;
                if (v != 0) {
                    col_rows[b[j].first].insert(dst);
                    out.emplace_back(b[j].first, std::move(v));
                }
                ++j;
            } else {
                Integer v = a[i].second + coef * b[j].second;
                if (v != 0)
                    out.emplace_back(a[i].first, std::move(v));
                else
                    col_rows[a[i].first].erase(dst);
                ++i;
                ++j;
            }
        }
        rows[dst] = std::move(out);
    }
};

using Dense = std::vector<std::vector<Integer>>;

// Fraction-free Bareiss elimination with full pivoting.  Returns the rank
// and stores in `minor` the determinant of the selected nonsingular
// rank-sized submatrix (a nonzero maximal minor, hence a multiple of every
// invariant factor).
int bareiss_rank_and_minor(Dense a, Integer& minor) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    int rank = 0;
    Integer prev = 1;
    std::vector<int> col_of;
    for (int step = 0; step < std::min(rows, cols); ++step) {
        int pr = -1, pc = -1;
        for (int r = step; r < rows && pr < 0; ++r)
            for (int c = 0; c < cols; ++c)
                if (a[r][c] != 0 &&
                    std::find(col_of.begin(), col_of.end(), c) == col_of.end()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[step], a[pr]);
        col_of.push_back(pc);
        for (int r = step + 1; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                if (c == pc) continue;
                a[r][c] = (a[step][pc] * a[r][c] - a[r][pc] * a[step][c]) / prev;
            }
            a[r][pc] = 0;
        }
        prev = a[step][pc];
        ++rank;
    }
    minor = boost::multiprecision::abs(prev);
    return rank;
}

Integer mod_symmetric(const Integer& a, const Integer& d) {
    Integer r = a % d;
    if (2 * boost::multiprecision::abs(r) > d) r -= sign_of(r) * d;
    return r;
}

// Invariant factors of a dense block, working modulo a positive multiple D
// of every invariant factor.  Conceptually the matrix is stacked with D*I,
// which licenses reducing all entries (and the pivots) modulo D; entries
// therefore never exceed D.  Returns exactly `rank` factors, padding with D
// for pivots that vanished modulo D.
std::vector<Integer> snf_dense_mod(Dense a, const Integer& d, int rank) {
    for (auto& row : a)
        for (auto& v : row) v = mod_symmetric(v, d);

    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<Integer> divisors;
    int top = 0;

    while (static_cast<int>(divisors.size()) < rank) {
        int pr = -1, pc = -1;
        Integer best = 0;
        for (int r = top; r < rows; ++r)
            for (int c = top; c < cols; ++c) {
                if (a[r][c] == 0) continue;
                const Integer v = boost::multiprecision::abs(a[r][c]);
                if (pr < 0 || v < best) {
                    pr = r;
                    pc = c;
                    best = v;
                }
            }
        if (pr < 0) break;  // everything left vanished modulo d
        std::swap(a[top], a[pr]);
        for (int r = top; r < rows; ++r) std::swap(a[r][top], a[r][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = top + 1; r < rows; ++r) {
                if (a[r][top] == 0) continue;
                Integer q, rem;
                divmod_nearest(a[r][top], a[top][top], q, rem);
                for (int c = top; c < cols; ++c)
                    a[r][c] = mod_symmetric(a[r][c] - q * a[top][c], d);
                if (a[r][top] != 0) {  // remainder became the smaller pivot
                    std::swap(a[top], a[r]);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int c = top + 1; c < cols; ++c) {
                if (a[top][c] == 0) continue;
                Integer q, rem;
                divmod_nearest(a[top][c], a[top][top], q, rem);
                for (int r = top; r < rows; ++r)
                    a[r][c] = mod_symmetric(a[r][c] - q * a[r][top], d);
                if (a[top][c] != 0) {
                    for (int r = top; r < rows; ++r) std::swap(a[r][top], a[r][c]);
                    clean = false;
                }
            }
        }
        divisors.push_back(boost::multiprecision::gcd(
            boost::multiprecision::abs(a[top][top]), d));
        ++top;
    }
    while (static_cast<int>(divisors.size()) < rank) divisors.push_back(d);
    return divisors;
}

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
    EliminationState st;
    st.rows.assign(m.rows(), {});
    st.col_rows.assign(m.cols(), {});
    st.row_alive.assign(m.rows(), 1);
    st.col_alive.assign(m.cols(), 1);
    for (const auto& [rc, v] : m.entries()) {
        st.rows[rc.first].emplace_back(rc.second, v);
        st.col_rows[rc.second].insert(rc.first);
    }

    // Phase 1: eliminate with unit pivots only, preferring pivots whose row
    // and column carry small entries and little fill.  The bit cap keeps
    // expression swell out of this phase; whatever it cannot handle cheaply
    // is left for the modular phase.
    constexpr std::size_t kBitCap = 96;
    int unit_pivots = 0;
    std::vector<std::size_t> row_bits(st.rows.size(), 0);
    std::vector<std::size_t> col_bits(st.col_rows.size(), 0);
    for (;;) {
        std::fill(row_bits.begin(), row_bits.end(), 0);
        std::fill(col_bits.begin(), col_bits.end(), 0);
        for (std::size_t r = 0; r < st.rows.size(); ++r) {
            if (!st.row_alive[r]) continue;
            for (const auto& [c, v] : st.rows[r]) {
                const std::size_t b = bits_of(v);
                row_bits[r] = std::max(row_bits[r], b);
                col_bits[c] = std::max(col_bits[c], b);
            }
        }
        int pr = -1, pc = -1;
        std::size_t best_cost = 0;
        for (int r = 0; r < static_cast<int>(st.rows.size()); ++r) {
            if (!st.row_alive[r]) continue;
            const std::size_t rn = st.rows[r].size();
            if (rn == 0) continue;
            for (const auto& [c, v] : st.rows[r]) {
                if (v != 1 && v != -1) continue;
                if (row_bits[r] + col_bits[c] > kBitCap) continue;
                const std::size_t fill = (rn - 1) * (st.col_rows[c].size() - 1);
                const std::size_t cost = (row_bits[r] + col_bits[c]) * (fill + 1);
                if (pr < 0 || cost < best_cost) {
                    pr = r;
                    pc = c;
                    best_cost = cost;
                }
            }
        }
        if (pr < 0) break;

        // Clear the pivot column by row operations; with a unit pivot the
        // remainders vanish.  The pivot row is then cleared by column
        // operations that touch no other row.
        const Integer pv = [&] {
            for (const auto& [c, v] : st.rows[pr])
                if (c == pc) return v;
            return Integer(0);
        }();
        const std::vector<int> users(st.col_rows[pc].begin(), st.col_rows[pc].end());
        for (int r : users) {
            if (r == pr) continue;
            Integer a = 0;
            for (const auto& [c, v] : st.rows[r])
                if (c == pc) {
                    a = v;
                    break;
                }
            if (a == 0) continue;
            st.row_axpy(r, pr, -a * pv);  // pv in {1,-1}: subtract a/pv times
        }
        for (const auto& [c, v] : st.rows[pr]) st.col_rows[c].erase(pr);
        st.rows[pr].clear();
        st.row_alive[pr] = 0;
        st.col_alive[pc] = 0;
        ++unit_pivots;
    }

    // Phase 2: the remaining block, densified.
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < static_cast<int>(st.rows.size()); ++r)
        if (st.row_alive[r] && !st.rows[r].empty()) live_rows.push_back(r);
    {
        std::set<int> cols;
        for (int r : live_rows)
            for (const auto& [c, v] : st.rows[r]) cols.insert(c);
        live_cols.assign(cols.begin(), cols.end());
    }

    std::vector<Integer> divisors(unit_pivots, 1);
    if (!live_rows.empty()) {
        Dense block(live_rows.size(), std::vector<Integer>(live_cols.size(), 0));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : st.rows[live_rows[i]]) {
                const auto it = std::lower_bound(live_cols.begin(), live_cols.end(), c);
                block[i][it - live_cols.begin()] = v;
            }
        Integer minor = 1;
        const int rank = bareiss_rank_and_minor(block, minor);
        if (rank > 0) {
            if (minor == 1) {
                divisors.insert(divisors.end(), rank, Integer(1));
            } else {
                const std::vector<Integer> rest = snf_dense_mod(block, minor, rank);
                divisors.insert(divisors.end(), rest.begin(), rest.end());
            }
        }
    }

    SnfResult out;
    out.divisors = invariant_factor_closure(std::move(divisors));
    out.rank = static_cast<int>(out.divisors.size());
    return out;
}

}  // namespace coxdim
