#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxdim/simplicial.hpp"

namespace coxdim {

/// Semi-simplicial complex: cells per dimension with explicit attaching data.
/// A k-cell lists its k+1 boundary (k-1)-cells, subject to the simplicial
/// identities d_i d_j = d_{j-1} d_i for i < j.  Distinct cells may share a
/// vertex set; this is what carries non-simplicial quotients until
/// barycentric subdivision restores simpliciality.
class DeltaComplex {
public:
    DeltaComplex() = default;

    /// face_maps[d][c] holds the d+1 boundary cells of the d-cell c, for
    /// d >= 1 (index 0 of the outer vector is ignored).  Validates the
    /// simplicial identities.
    static DeltaComplex build(std::vector<std::string> vertex_names,
                              std::vector<std::vector<std::vector<int>>> face_maps);

    int dim() const;
    std::size_t cell_count(int d) const;
    int face(int d, int cell, int i) const;
    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }

    /// Ordered vertices of a cell (may contain repeats when the attaching
    /// maps identify corners).
    std::vector<int> cell_vertices(int d, int cell) const;

    /// The face of a cell spanned by the given ascending vertex positions.
    /// Returns (dim, cell id).
    std::pair<int, int> restrict_cell(int d, int cell, const std::vector<int>& positions) const;

    /// No repeated vertices within a cell, and distinct cells of equal
    /// dimension have distinct vertex sets.  When false and reason is given,
    /// stores a short description of the first violation.
    bool is_simplicial(std::string* reason = nullptr) const;

    /// Converts to a SimplicialComplex; throws BuildError when not simplicial.
    SimplicialComplex promote() const;

private:
    void validate() const;

    std::vector<std::string> vertex_names_;
    std::vector<std::vector<std::vector<int>>> face_maps_;
};

/// Cell-level action of a cyclic group: one permutation per dimension.
struct DeltaAction {
    int order = 1;
    std::vector<std::vector<int>> perm;  // perm[d][cell]
};

/// Checks that the permutations form a semi-simplicial automorphism whose
/// order divides the declared group order.
void validate_action(const DeltaComplex& x, const DeltaAction& action);

struct DeltaSubdivision {
    DeltaComplex complex;
    /// sd 0-cell id -> (dim, cell) of the originating cell of the input
    std::vector<std::pair<int, int>> vertex_origin;
};

/// Barycentric subdivision at the delta level.  k-cells of the output are
/// pairs (cell c of the input, chain of vertex-position subsets ending at
/// the full set).  name_prefix seeds the generated barycenter names.
DeltaSubdivision barycentric_subdivision(const DeltaComplex& x,
                                         const std::string& name_prefix);

/// Pushes a cell action through a subdivision.
DeltaAction transport_action(const DeltaComplex& x, const DeltaAction& action,
                             const DeltaSubdivision& sd);

/// Quotient by the equivalence generated by the given cell identifications
/// (closure under face maps).  Returns the quotient and the old->new cell
/// maps per dimension.
struct DeltaQuotient {
    DeltaComplex complex;
    std::vector<std::vector<int>> cell_map;  // cell_map[d][old] = new id
};
DeltaQuotient quotient(const DeltaComplex& x,
                       const std::vector<std::tuple<int, int, int>>& identifications);

}  // namespace coxdim
