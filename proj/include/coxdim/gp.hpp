#pragma once

#include <map>
#include <optional>
#include <string>

#include "coxdim/delta.hpp"
#include "coxdim/racg.hpp"
#include "coxdim/simplicial.hpp"

namespace coxdim {

/// Cyclic-group action on a simplicial complex, given by the vertex
/// permutation of a generator.  The permutation must map faces to faces and
/// its order must divide the group order.
struct GroupAction {
    int order = 1;
    std::map<std::string, std::string> generator;
};

void validate_action(const SimplicialComplex& k, const GroupAction& action);

struct EquivariantComplex {
    SimplicialComplex complex;
    GroupAction action;
};

struct EquivariantDelta {
    DeltaComplex complex;
    DeltaAction action;
};

/// The quotient Z of the cone over a regular p-gon by the boundary rotation
/// orbits, as a delta complex with its residual Z/p action.  p must be an
/// odd prime.
EquivariantDelta build_quotient_Z(int p);

/// The full subcomplex of faces fixed pointwise by the generator.
SimplicialComplex fixed_subcomplex(const EquivariantComplex& ec);

/// True when every face that is setwise invariant under the generator is
/// fixed pointwise.  Under this condition fixed_subcomplex is the honest
/// singular set.
bool action_is_regular(const EquivariantComplex& ec);

/// Barycentric subdivision with the action transported to the barycenters.
EquivariantComplex equivariant_subdivision(const EquivariantComplex& ec);

struct BuildLResult {
    EquivariantComplex l;
    int subdivisions = 0;
    int promoted_at = 0;  // subdivision step at which simpliciality appeared
    /// The promoted complex: a triangulation of Z with the residual action.
    EquivariantComplex z_simplicial;
};

/// k equivariant barycentric subdivisions of Z, promoted to a simplicial
/// complex as soon as simpliciality holds.  Fails with an "insufficient
/// subdivision" error when the result is not simplicial or not flag.
///
/// Note: a barycentric subdivision of any 2-complex with two triangles
/// sharing an edge contains an empty square (the two barycenters against
/// the shared edge's endpoints), so this tower never satisfies the
/// no-empty-square condition.  Use build_L_flag_no_square for a
/// triangulation of Z meeting all six graph conditions.
BuildLResult build_L(int p, int subdivisions = 3);

/// Direct Z/p-equivariant triangulation of Z with no empty squares: an apex
/// fan, rings - 2 annular lattice strips of p * circle_length vertices, and
/// a final strip attached p-to-1 to a circle of length circle_length.
/// Requires rings >= 3 (so the apex and the branch circle share no
/// neighbours) and circle_length >= 5 (so the branch circle is chordless).
EquivariantComplex build_L_flag_no_square(int p, int rings = 3, int circle_length = 6);

struct KSingPair {
    SimplicialComplex k;       // K = cone over the barycentric subdivision of l
    SimplicialComplex k_sing;  // K_sing = L' with the cone over L'_sing glued in
    std::string apex;
};

/// Builds K = C(L') and K_sing = L' u_{L'_sing} C(L'_sing) with a shared
/// cone point.  l_sing must be a subcomplex of l.
KSingPair build_K_sing(const SimplicialComplex& l, const SimplicialComplex& l_sing);

struct GpChecks {
    bool graph_conditions = false;
    bool h2_L_is_Z_p = false;
    bool vcd_is_3 = false;
    bool group_ring_is_Z_p = false;
    bool h1_Z_zero = false;
    bool h2_Z_is_Z_p = false;
    bool h1_L_zero = false;
    bool h2_L_matches_Z = false;
    bool l_sing_is_circle_and_point = false;
    bool k_sing_rank_at_least_1 = false;
    bool relative_matches_h2_k_sing = false;
    bool mayer_vietoris_rank_bound = false;
    bool action_regular = false;

    bool all() const {
        return graph_conditions && h2_L_is_Z_p && vcd_is_3 && group_ring_is_Z_p &&
               h1_Z_zero && h2_Z_is_Z_p && h1_L_zero && h2_L_matches_Z &&
               l_sing_is_circle_and_point && k_sing_rank_at_least_1 &&
               relative_matches_h2_k_sing && mayer_vietoris_rank_bound && action_regular;
    }
};

enum class LBuilder { Ring, Barycentric };

struct GpReport {
    int p = 0;
    int subdivisions = 0;
    int promoted_at = 0;
    LBuilder builder = LBuilder::Ring;
    RacgCertificate certificate;
    FgAbelianGroup h1_Z, h2_Z;
    FgAbelianGroup h1_L, h2_L_reduced;
    FgAbelianGroup h0_L_sing, h1_L_sing;
    FgAbelianGroup h2_K_sing, relative_h3;
    GpChecks checks;
    bool verdict = false;
    std::size_t l_vertices = 0, l_faces = 0;
    std::size_t k_sing_vertices = 0;
};

/// Runs the full construction and verification pipeline for one odd prime.
/// The default builder is the flag-no-square ring triangulation (the
/// barycentric tower cannot satisfy the no-empty-square condition); the
/// quotient Z is always built and simplicialized independently as a
/// cross-check of the cohomology.
GpReport verify_gp(int p, int subdivisions = 3, LBuilder builder = LBuilder::Ring);

}  // namespace coxdim
