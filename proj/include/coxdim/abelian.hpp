#pragma once

#include <string>
#include <vector>

#include "coxdim/base.hpp"

namespace coxdim {

/// Finitely generated abelian group in canonical form: a free rank together
/// with the invariant factors d_1 | d_2 | ... , each >= 2.  Equality of the
/// representation is isomorphism of the groups.
struct FgAbelianGroup {
    int rank = 0;
    std::vector<Integer> torsion;

    FgAbelianGroup() = default;
    FgAbelianGroup(int free_rank, std::vector<Integer> invariant_factors);

    bool is_trivial() const { return rank == 0 && torsion.empty(); }

    /// lcm of the invariant factors; 1 for a free (or trivial) group.
    Integer torsion_exponent() const;

    /// "0", "Z^1", "Z/3", "Z^2 + Z/2 + Z/6", ...
    std::string to_string() const;

    bool operator==(const FgAbelianGroup& other) const {
        return rank == other.rank && torsion == other.torsion;
    }
    bool operator!=(const FgAbelianGroup& other) const { return !(*this == other); }
};

/// Z^n
FgAbelianGroup free_abelian(int n);
/// Z/n (n >= 1; n == 1 gives the trivial group)
FgAbelianGroup cyclic(const Integer& n);

/// Canonical form of a direct sum of cyclic groups with the given moduli
/// (moduli of 0 are treated as Z summands, 1s are dropped).
FgAbelianGroup from_cyclic_moduli(int free_rank, std::vector<Integer> moduli);

/// gcd/lcm closure of a multiset of positive moduli into a divisibility
/// chain d_1 | d_2 | ... sorted ascending.  Ones are kept; diag(2,3)
/// becomes [1,6].
std::vector<Integer> invariant_factor_closure(std::vector<Integer> moduli);

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

}  // namespace coxdim
