#pragma once

#include "coxdim/abelian.hpp"
#include "coxdim/integer_matrix.hpp"
#include "coxdim/simplicial.hpp"
#include "coxdim/snf.hpp"

namespace coxdim {

/// Simplicial coboundary delta^n: rows are the (n+1)-faces, columns the
/// n-faces, entry (sigma, tau) = (-1)^i where i is the position of the
/// vertex of sigma missing from tau.  With augmented = true, n = -1 yields
/// the augmentation column (all ones against the vertices).
IntegerMatrix coboundary_matrix(const SimplicialComplex& k, int n, bool augmented = false);

/// Integral simplicial cohomology H^n(k) (reduced = false) or reduced
/// cohomology (reduced = true; degree -1 is meaningful and equals Z exactly
/// for the empty complex).  Degrees above dim(k) are trivial.
FgAbelianGroup cohomology(const SimplicialComplex& k, int n, bool reduced = false);

/// Cohomology of the pair (k, a): cochains supported on faces of k not in a.
/// a must be a subcomplex of k.
FgAbelianGroup relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& a,
                                   int n);

/// Betti number = free rank of H^n.
int betti_number(const SimplicialComplex& k, int n, bool reduced = false);

/// True when the reduced cohomology of k vanishes in every degree.
bool is_acyclic(const SimplicialComplex& k);

}  // namespace coxdim
