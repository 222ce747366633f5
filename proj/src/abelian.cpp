#include "coxdim/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace coxdim {

// Z_a + Z_b = Z_gcd(a,b) + Z_lcm(a,b), applied until the chain stabilizes.
std::vector<Integer> invariant_factor_closure(std::vector<Integer> moduli) {
    for (const Integer& m : moduli)
        if (m < 1) throw InputError("invariant_factor_closure: modulus must be positive");
    std::sort(moduli.begin(), moduli.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < moduli.size(); ++i) {
            for (std::size_t j = i + 1; j < moduli.size(); ++j) {
                if (moduli[j] % moduli[i] != 0) {
                    const Integer g = boost::multiprecision::gcd(moduli[i], moduli[j]);
                    const Integer l = moduli[i] / g * moduli[j];
                    moduli[i] = g;
                    moduli[j] = l;
                    changed = true;
                }
            }
        }
        if (changed) std::sort(moduli.begin(), moduli.end());
    }
    return moduli;
}

FgAbelianGroup::FgAbelianGroup(int free_rank, std::vector<Integer> invariant_factors)
    : rank(free_rank), torsion(std::move(invariant_factors)) {
    if (rank < 0) throw InputError("FgAbelianGroup: negative rank");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw InputError("FgAbelianGroup: invariant factor < 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw InputError("FgAbelianGroup: divisibility chain violated");
    }
}

Integer FgAbelianGroup::torsion_exponent() const {
    return torsion.empty() ? Integer(1) : torsion.back();
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (rank > 0) {
        out << "Z^" << rank;
        first = false;
    }
    for (const Integer& d : torsion) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
    }
    return out.str();
}

FgAbelianGroup free_abelian(int n) { return FgAbelianGroup(n, {}); }

FgAbelianGroup cyclic(const Integer& n) {
    if (n < 1) throw InputError("cyclic: modulus must be >= 1");
    if (n == 1) return FgAbelianGroup();
    return FgAbelianGroup(0, {n});
}

FgAbelianGroup from_cyclic_moduli(int free_rank, std::vector<Integer> moduli) {
    int rank = free_rank;
    std::vector<Integer> torsion;
    for (const Integer& m : moduli) {
        if (m < 0) throw InputError("from_cyclic_moduli: negative modulus");
        if (m == 0)
            ++rank;
        else if (m > 1)
            torsion.push_back(m);
    }
    torsion = invariant_factor_closure(std::move(torsion));
    torsion.erase(std::remove_if(torsion.begin(), torsion.end(),
                                 [](const Integer& m) { return m == 1; }),
                  torsion.end());
    FgAbelianGroup g;
    g.rank = rank;
    g.torsion = std::move(torsion);
    return g;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Integer> moduli = a.torsion;
    moduli.insert(moduli.end(), b.torsion.begin(), b.torsion.end());
    return from_cyclic_moduli(a.rank + b.rank, std::move(moduli));
}

}  // namespace coxdim
