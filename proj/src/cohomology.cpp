#include "coxdim/cohomology.hpp"

#include <algorithm>

namespace coxdim {

namespace {

// Cochain group dimension in degree n.
std::size_t cochain_dim(const SimplicialComplex& k, int n, bool augmented) {
    if (n == -1) return augmented ? 1 : 0;
    if (n < -1) return 0;
    return k.faces(n).size();
}

FgAbelianGroup cohomology_from_matrices(std::size_t cn, const IntegerMatrix& delta_n,
                                        const IntegerMatrix& delta_prev) {
    const SnfResult out = smith_normal_form(delta_n);
    const SnfResult in = smith_normal_form(delta_prev);
    const int free_rank = static_cast<int>(cn) - out.rank - in.rank;
    std::vector<Integer> torsion;
    for (const Integer& d : in.divisors)
        if (d > 1) torsion.push_back(d);
    return from_cyclic_moduli(free_rank, std::move(torsion));
}

}  // namespace

IntegerMatrix coboundary_matrix(const SimplicialComplex& k, int n, bool augmented) {
    if (augmented && n < -1) throw InputError("coboundary_matrix: degree below -1");
    if (n == -1) {
        // Augmentation: one column (the empty simplex), a 1 against every vertex.
        IntegerMatrix m(static_cast<int>(k.faces(0).size()), augmented ? 1 : 0);
        if (augmented)
            for (int r = 0; r < m.rows(); ++r) m.set(r, 0, 1);
        return m;
    }
    if (n < -1) return IntegerMatrix(0, 0);

    const auto& domain = k.faces(n);
    const auto& range = k.faces(n + 1);
    IntegerMatrix m(static_cast<int>(range.size()), static_cast<int>(domain.size()));
    for (int r = 0; r < static_cast<int>(range.size()); ++r) {
        const VertexList& sigma = range[r];
        VertexList tau;
        tau.reserve(sigma.size() - 1);
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            tau.clear();
            for (std::size_t j = 0; j < sigma.size(); ++j)
                if (j != i) tau.push_back(sigma[j]);
            const int c = k.face_index(tau);
            m.set(r, c, (i % 2 == 0) ? 1 : -1);
        }
    }
    return m;
}

FgAbelianGroup cohomology(const SimplicialComplex& k, int n, bool reduced) {
    if (n < (reduced ? -1 : 0)) return FgAbelianGroup();
    if (n > k.dim()) return FgAbelianGroup();
    const std::size_t cn = cochain_dim(k, n, reduced);
    const IntegerMatrix delta_n = coboundary_matrix(k, n, reduced);
    const IntegerMatrix delta_prev =
        (n - 1 >= -1) ? coboundary_matrix(k, n - 1, reduced) : IntegerMatrix(0, 0);
    return cohomology_from_matrices(cn, delta_n, delta_prev);
}

FgAbelianGroup relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& a,
                                   int n) {
    if (!k.contains_subcomplex(a))
        throw InputError("relative_cohomology: second argument is not a subcomplex");
    if (n < 0 || n > k.dim()) return FgAbelianGroup();

    // Relative cochains live on faces of k that are not faces of a.
    auto relative_faces = [&](int d, std::vector<int>& keep) {
        keep.clear();
        const auto& all = k.faces(d);
        for (int i = 0; i < static_cast<int>(all.size()); ++i)
            if (!a.has_face_names(k.face_names(all[i]))) keep.push_back(i);
    };

    auto restricted = [&](int d) {
        std::vector<int> rows, cols;
        relative_faces(d + 1, rows);
        relative_faces(d, cols);
        std::vector<int> row_pos(k.faces(d + 1).size(), -1);
        std::vector<int> col_pos(k.faces(d).size(), -1);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_pos[rows[i]] = i;
        for (int i = 0; i < static_cast<int>(cols.size()); ++i) col_pos[cols[i]] = i;
        const IntegerMatrix full = coboundary_matrix(k, d, false);
        IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (const auto& [rc, v] : full.entries()) {
            const int r = row_pos[rc.first];
            const int c = col_pos[rc.second];
            if (r >= 0 && c >= 0) m.set(r, c, v);
        }
        return m;
    };

    std::vector<int> keep;
    relative_faces(n, keep);
    const std::size_t cn = keep.size();
    const IntegerMatrix delta_n = restricted(n);
    const IntegerMatrix delta_prev = (n >= 1) ? restricted(n - 1) : IntegerMatrix(0, 0);
    return cohomology_from_matrices(cn, delta_n, delta_prev);
}

int betti_number(const SimplicialComplex& k, int n, bool reduced) {
    return cohomology(k, n, reduced).rank;
}

bool is_acyclic(const SimplicialComplex& k) {
    for (int n = -1; n <= k.dim(); ++n)
        if (!cohomology(k, n, true).is_trivial()) return false;
    return true;
}

}  // namespace coxdim
