#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxdim/abelian.hpp"

namespace coxdim {

/// Tensor product of finitely generated abelian groups, in canonical form.
FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Tor_1 over Z; kills free parts, Tor(Z/n, Z/m) = Z/gcd(n, m).
FgAbelianGroup tor1(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Entry of a partially known graded group.  Zero and Known are exact;
/// Unknown carries an optional annihilator bound: exponent_bound > 0 means
/// the entry is torsion of exponent dividing the bound (which tensoring
/// against a known finite group always yields), 0 means no information.
struct BandEntry {
    enum class Kind { Zero, Known, Unknown };
    Kind kind = Kind::Zero;
    FgAbelianGroup value;      // Known only
    Integer exponent_bound = 0;

    static BandEntry zero() { return {}; }
    static BandEntry known(FgAbelianGroup g);
    static BandEntry unknown(Integer exponent_bound = 0);

    bool is_zero() const { return kind == Kind::Zero; }
    bool is_known() const { return kind == Kind::Known; }
    bool is_unknown() const { return kind == Kind::Unknown; }
    std::string to_string() const;
    bool operator==(const BandEntry& other) const;
};

/// Degree-indexed groups with three-valued entries; everything above the top
/// degree is Zero.  Entries at negative degrees can arise from Tor terms of
/// abstract bands and are kept, though the group-theoretic inputs never
/// produce them.
class BandedGradedGroup {
public:
    BandedGradedGroup() = default;

    void set(int degree, BandEntry e);
    BandEntry get(int degree) const;  // Zero when absent
    int top_degree() const;           // highest degree carrying a non-Zero entry

    /// Highest degree whose entry is not certainly Zero;
    /// every degree above it is certified Zero.  -1000000 when the whole
    /// band is Zero.
    int certified_top() const;

    const std::map<int, BandEntry>& entries() const { return entries_; }
    bool operator==(const BandedGradedGroup& other) const;

private:
    std::map<int, BandEntry> entries_;  // non-Zero entries only
};

/// One Kunneth step: degree n of the result collects tensor terms from
/// p + q = n and Tor terms from p + q = n + 1.  Zero absorbs, Known
/// combines exactly, Unknown propagates with its annihilator bound (a
/// coprime bound certifies Zero).
BandedGradedGroup kunneth_step(const BandedGradedGroup& a, const BandedGradedGroup& b);

/// One free-product factor class: top degree d with known top group,
/// everything below the top unknown, repeated with a multiplicity.
struct FactorProfile {
    int top_dimension = 0;
    FgAbelianGroup top_group;
    int multiplicity = 1;
};

/// The band of a single factor: Known(top_group) at the top dimension,
/// Unknown below.
BandedGradedGroup factor_band(const FactorProfile& profile);

enum class ProductRegime { Coprime, CommonDivisor, Mixed };

struct ProductReport {
    int vcd_upper = 0;
    std::optional<int> vcd_exact;
    int bredon_cd = 0;
    FgAbelianGroup top_group;
    ProductRegime regime = ProductRegime::Mixed;
    int band_certified_top = 0;
    BandedGradedGroup band;
};

/// Dimension report for a direct product of factor classes: bredon_cd is
/// always the sum of the dimensions; pairwise coprime top exponents give the
/// sum - (#classes) + 1 upper bound, a common divisor gives an exact value
/// with the gcd as top torsion, and mixed regimes fall back to the degree
/// certified by the band evaluator.
ProductReport product_dimension_report(const std::vector<FactorProfile>& profiles);

/// Geometric dimension of an iterated free product: a fold of
/// max(a, b, 1) over the factors (a single factor is returned unchanged).
int free_product_gd(const std::vector<int>& gds);

std::string to_string(ProductRegime regime);

}  // namespace coxdim
