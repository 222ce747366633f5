#pragma once

#include <optional>

#include "coxdim/cohomology.hpp"
#include "coxdim/simplicial.hpp"

namespace coxdim {

/// Outcome of the top group-ring cohomology computation: the value is only
/// defined when the vanishing hypothesis on the complements holds.
struct GroupRingTop {
    bool hypothesis_holds = false;
    FgAbelianGroup value;  // meaningful only when hypothesis_holds
};

/// The full condition bundle for the right-angled Coxeter group W determined
/// by the 1-skeleton of a flag complex L.
struct RacgCertificate {
    bool hyperbolic = false;
    bool one_ended = false;
    bool no_dominating_vertex = false;
    bool star_complements_connected = false;
    bool maximal_cover = false;
    bool flag = false;
    bool connected = false;
    int dimension = -1;
    FgAbelianGroup top_reduced_cohomology;
    int vcd = 0;
    GroupRingTop top_group_ring_cohomology;
    bool dimension_rigid = false;
};

/// W is Gromov-hyperbolic iff every 4-cycle of the defining graph has a
/// chord, i.e. the graph has no induced 4-cycle.
bool check_hyperbolic(const Graph& g);

/// W is one-ended iff L is connected and the complement of every simplex
/// (full subcomplex on the complementary vertex set) is connected.
/// Requires a flag complex.
bool check_one_ended(const SimplicialComplex& l);

/// The defining graph has radius at least 2: no vertex adjacent to all others.
bool check_no_dominating_vertex(const Graph& g);

/// For every vertex s, the graph induced on the complement of the closed
/// star {s} + N(s) is nonempty and connected.
bool check_star_complements(const Graph& g);

/// Every nonempty non-maximal simplex lies in at least 2 maximal simplices.
bool check_maximal_cover(const SimplicialComplex& l);

/// Davis's formula: vcd(W) = max over simplices sigma (including the empty
/// one) of 1 + top nonvanishing degree of the reduced cohomology of the
/// complement, with the reduced cohomology of the empty complex being Z in
/// degree -1.  Fast path: when the top reduced cohomology of l itself is
/// nonzero, vcd = dim(l) + 1 without scanning complements.  The exhaustive
/// scan is guarded by a face-count limit.
int vcd_davis(const SimplicialComplex& l, std::size_t scan_limit = 20000);

/// Top cohomology of W with group-ring coefficients: when the top reduced
/// cohomology of every nonempty complement vanishes, it equals the top
/// reduced cohomology of l; otherwise the hypothesis fails and no value is
/// guessed.
GroupRingTop top_group_ring_cohomology(const SimplicialComplex& l);

/// Runs every checker and assembles the dimension-rigidity certificate.
/// Requires a flag complex (input error otherwise).
RacgCertificate rigidity_certificate(const SimplicialComplex& l);

}  // namespace coxdim
