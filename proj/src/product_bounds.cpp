#include "coxdim/product_bounds.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace coxdim {

namespace {

constexpr int kBandBottom = -1000000;

Integer gcd_bound(const Integer& a, const Integer& b) {
    // Annihilator combination for products: 0 means unconstrained.
    if (a == 0) return b;
    if (b == 0) return a;
    return boost::multiprecision::gcd(a, b);
}

Integer lcm_bound(const Integer& a, const Integer& b) {
    // Annihilator combination for direct sums.
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

// Exponent bound of a known group: 0 when a free part is present.
Integer known_bound(const FgAbelianGroup& g) {
    if (g.rank > 0) return 0;
    return g.torsion_exponent();
}

BandEntry tensor_entry(const BandEntry& a, const BandEntry& b) {
    if (a.is_zero() || b.is_zero()) return BandEntry::zero();
    if (a.is_known() && b.is_known()) return BandEntry::known(tensor(a.value, b.value));
    const Integer ba = a.is_known() ? known_bound(a.value) : a.exponent_bound;
    const Integer bb = b.is_known() ? known_bound(b.value) : b.exponent_bound;
    return BandEntry::unknown(gcd_bound(ba, bb));
}

BandEntry tor_entry(const BandEntry& a, const BandEntry& b) {
    if (a.is_zero() || b.is_zero()) return BandEntry::zero();
    if (a.is_known() && b.is_known()) return BandEntry::known(tor1(a.value, b.value));
    // Tor kills free parts, so a known torsion-free operand gives Zero even
    // against an unknown one.
    if (a.is_known() && a.value.torsion.empty()) return BandEntry::zero();
    if (b.is_known() && b.value.torsion.empty()) return BandEntry::zero();
    const Integer ba = a.is_known() ? a.value.torsion_exponent() : a.exponent_bound;
    const Integer bb = b.is_known() ? b.value.torsion_exponent() : b.exponent_bound;
    return BandEntry::unknown(gcd_bound(ba, bb));
}

BandEntry sum_entries(const BandEntry& a, const BandEntry& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_known() && b.is_known()) return BandEntry::known(direct_sum(a.value, b.value));
    const Integer ba = a.is_known() ? known_bound(a.value) : a.exponent_bound;
    const Integer bb = b.is_known() ? known_bound(b.value) : b.exponent_bound;
    return BandEntry::unknown(lcm_bound(ba, bb));
}

}  // namespace

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    // (Z^r + sum Z/d_i) x (Z^s + sum Z/e_j)
    std::vector<Integer> moduli;
    for (const Integer& d : a.torsion)
        for (int i = 0; i < b.rank; ++i) moduli.push_back(d);
    for (const Integer& e : b.torsion)
        for (int i = 0; i < a.rank; ++i) moduli.push_back(e);
    for (const Integer& d : a.torsion)
        for (const Integer& e : b.torsion)
            moduli.push_back(boost::multiprecision::gcd(d, e));
    return from_cyclic_moduli(a.rank * b.rank, std::move(moduli));
}

FgAbelianGroup tor1(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Integer> moduli;
    for (const Integer& d : a.torsion)
        for (const Integer& e : b.torsion)
            moduli.push_back(boost::multiprecision::gcd(d, e));
    return from_cyclic_moduli(0, std::move(moduli));
}

BandEntry BandEntry::known(FgAbelianGroup g) {
    if (g.is_trivial()) return zero();
    BandEntry e;
    e.kind = Kind::Known;
    e.value = std::move(g);
    return e;
}

BandEntry BandEntry::unknown(Integer exponent_bound) {
    if (exponent_bound == 1) return zero();  // annihilated by 1
    BandEntry e;
    e.kind = Kind::Unknown;
    e.exponent_bound = std::move(exponent_bound);
    return e;
}

std::string BandEntry::to_string() const {
    switch (kind) {
        case Kind::Zero:
            return "0";
        case Kind::Known:
            return value.to_string();
        case Kind::Unknown: {
            if (exponent_bound == 0) return "?";
            std::ostringstream s;
            s << "?(exponent | " << exponent_bound << ")";
            return s.str();
        }
    }
    return "?";
}

bool BandEntry::operator==(const BandEntry& other) const {
    if (kind != other.kind) return false;
    if (kind == Kind::Known) return value == other.value;
    if (kind == Kind::Unknown) return exponent_bound == other.exponent_bound;
    return true;
}

void BandedGradedGroup::set(int degree, BandEntry e) {
    if (e.is_zero())
        entries_.erase(degree);
    else
        entries_[degree] = std::move(e);
}

BandEntry BandedGradedGroup::get(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? BandEntry::zero() : it->second;
}

int BandedGradedGroup::top_degree() const {
    return entries_.empty() ? kBandBottom : entries_.rbegin()->first;
}

int BandedGradedGroup::certified_top() const { return top_degree(); }

bool BandedGradedGroup::operator==(const BandedGradedGroup& other) const {
    return entries_ == other.entries_;
}

BandedGradedGroup kunneth_step(const BandedGradedGroup& a, const BandedGradedGroup& b) {
    BandedGradedGroup out;
    std::map<int, BandEntry> acc;
    for (const auto& [p, ea] : a.entries()) {
        for (const auto& [q, eb] : b.entries()) {
            const BandEntry t = tensor_entry(ea, eb);
            if (!t.is_zero()) {
                auto [it, inserted] = acc.emplace(p + q, t);
                if (!inserted) it->second = sum_entries(it->second, t);
            }
            const BandEntry tor = tor_entry(ea, eb);
            if (!tor.is_zero()) {
                auto [it, inserted] = acc.emplace(p + q - 1, tor);
                if (!inserted) it->second = sum_entries(it->second, tor);
            }
        }
    }
    for (auto& [deg, e] : acc) out.set(deg, std::move(e));
    return out;
}

BandedGradedGroup factor_band(const FactorProfile& profile) {
    if (profile.top_dimension < 1)
        throw InputError("factor profile: top dimension must be >= 1");
    if (profile.top_group.is_trivial())
        throw InputError("factor profile: top group must be nontrivial");
    if (profile.multiplicity < 1)
        throw InputError("factor profile: multiplicity must be >= 1");
    BandedGradedGroup band;
    band.set(profile.top_dimension, BandEntry::known(profile.top_group));
    for (int q = 0; q < profile.top_dimension; ++q) band.set(q, BandEntry::unknown());
    return band;
}

ProductReport product_dimension_report(const std::vector<FactorProfile>& profiles) {
    if (profiles.empty()) throw InputError("product_dimension_report: empty profile list");

    const int r = static_cast<int>(profiles.size());
    int total = 0;
    std::vector<Integer> exponents;
    BandedGradedGroup band;
    bool first = true;
    for (const auto& prof : profiles) {
        const BandedGradedGroup f = factor_band(prof);
        total += prof.top_dimension * prof.multiplicity;
        exponents.push_back(known_bound(prof.top_group));
        for (int m = 0; m < prof.multiplicity; ++m) {
            band = first ? f : kunneth_step(band, f);
            first = false;
        }
    }

    bool pairwise_coprime = r >= 2;
    for (std::size_t i = 0; i < exponents.size() && pairwise_coprime; ++i) {
        if (exponents[i] < 2) pairwise_coprime = false;
        for (std::size_t j = i + 1; j < exponents.size() && pairwise_coprime; ++j)
            if (boost::multiprecision::gcd(exponents[i], exponents[j]) != 1)
                pairwise_coprime = false;
    }
    Integer common = 0;
    bool has_common = true;
    for (const Integer& e : exponents) {
        if (e == 0) {
            has_common = false;
            break;
        }
        common = boost::multiprecision::gcd(common, e);
    }
    has_common = has_common && common > 1;

    ProductReport report;
    report.bredon_cd = total;
    report.band = band;
    report.band_certified_top = band.certified_top();
    report.top_group = band.get(total).is_known() ? band.get(total).value : FgAbelianGroup();

    if (has_common) {
        report.regime = ProductRegime::CommonDivisor;
        report.vcd_exact = total;
        report.vcd_upper = total;
    } else if (pairwise_coprime) {
        report.regime = ProductRegime::Coprime;
        report.vcd_upper = total - r + 1;
    } else {
        report.regime = ProductRegime::Mixed;
        report.vcd_upper = std::max(0, report.band_certified_top);
    }
    return report;
}

int free_product_gd(const std::vector<int>& gds) {
    if (gds.empty()) throw InputError("free_product_gd: empty factor list");
    for (int g : gds)
        if (g < 0) throw InputError("free_product_gd: negative dimension");
    int acc = gds.front();
    for (std::size_t i = 1; i < gds.size(); ++i)
        acc = std::max({acc, gds[i], 1});
    return acc;
}

std::string to_string(ProductRegime regime) {
    switch (regime) {
        case ProductRegime::Coprime:
            return "coprime";
        case ProductRegime::CommonDivisor:
            return "common-divisor";
        case ProductRegime::Mixed:
            return "mixed";
    }
    return "mixed";
}

}  // namespace coxdim
