#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coxdim/product_bounds.hpp"

namespace coxdim {

/// Quotient tree of a free splitting with r one-ended factors: special
/// vertices 0..r-1 carry the factors, trivial vertices r..r+m-1 have trivial
/// stabilizer.  Minimality forces every trivial vertex to have degree >= 3,
/// so every vertex of degree 1 or 2 is special.
struct QuotientTree {
    int special_count = 0;
    int trivial_count = 0;
    std::vector<std::pair<int, int>> edges;  // sorted pairs (a < b)

    int vertex_count() const { return special_count + trivial_count; }
    std::vector<int> degrees() const;
};

/// Throws on a structure that is not a valid quotient tree.
void validate_tree(const QuotientTree& t);

/// Canonical code under isomorphisms that fix the special labels pointwise
/// and permute trivial vertices (AHU code rooted at the tree center).
std::string canonical_code(const QuotientTree& t);

/// Exhaustive enumeration up to isomorphism, sorted by canonical code.
std::vector<QuotientTree> enumerate_trees(int r);

/// Streaming variant; the callback sees each isomorphism class exactly once.
void enumerate_trees(int r, const std::function<void(const QuotientTree&)>& visit);

struct SpineCellBound {
    std::vector<int> degree_vector;  // degrees of the special vertices
    int edge_count = 0;
    int forest_edges = 0;       // edges of the forest induced on trivial vertices
    int forest_components = 0;  // its component count
    int max_cell_dim = 0;       // |E| - r + 1, also forest_edges + components
};

/// Per-tree data for the spine-cell dimension bound; asserts the tree
/// contraction identity |E| = |E(F)| + c + r - 1.
SpineCellBound cell_bound(const QuotientTree& t);

struct StabBoundReport {
    int r = 0;
    std::size_t tree_count = 0;
    std::size_t equality_count = 0;
    std::vector<std::string> violations;  // canonical codes; must stay empty
};

/// Checks sum(deg) + max_cell_dim <= 2r - 2 over every enumerated tree.
StabBoundReport verify_stab_bound(int r);

struct StabilizerShape {
    std::vector<int> degree_vector;
    int vcd_upper = 0;
    int bredon_cd = 0;
    ProductRegime regime = ProductRegime::Mixed;
};

/// Dimension data of the stabilizer of a tree: the product of the factors
/// with multiplicities given by the special-vertex degrees, evaluated
/// through the product-bounds calculus.
StabilizerShape stabilizer_shape(const QuotientTree& t,
                                 const std::vector<FactorProfile>& profiles);

struct OutBounds {
    int r = 0;
    int vcd_upper = 0;
    int bredon_cd_lower = 0;
    int gap = 0;
    std::size_t tree_count = 0;
};

/// Default factor profiles for r hyperbolic factors: top dimension 3 and
/// pairwise distinct odd prime exponents.
std::vector<FactorProfile> default_profiles(int r);

/// max over enumerated trees of (stabilizer vcd bound + cell dimension
/// bound), and of the stabilizer Bredon dimension.  For the default
/// profiles this evaluates to (5r-5, 6r-6).
OutBounds out_dimension_bounds(int r);
OutBounds out_dimension_bounds(int r, const std::vector<FactorProfile>& profiles);

struct AutBounds {
    int factors = 0;
    int vcd_upper = 0;
    int cd_lower = 0;
};

/// vcd(Aut) <= vcd(G) + vcd(Out); with F factors of dimension 3 this is
/// 3 + (5F - 5), against the lower bound 6F - 6.
AutBounds aut_dimension_bounds(int factors);

}  // namespace coxdim
