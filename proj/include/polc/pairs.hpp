#pragma once

// Pair relations of a morphism relative to a base class.

#include "polc/algebra.hpp"
#include "polc/baseclass.hpp"

#include <string>
#include <vector>

namespace polc {

inline constexpr std::size_t default_subset_cap = 16;

struct PairRelation {
    enum class Kind { plain, saturated };
    Kind kind = Kind::plain;
    Relation bits;

    std::size_t size() const noexcept { return bits.size(); }
    bool test(Element s, Element t) const { return bits.test(s, t); }
};

/// (s, t) iff α⁻¹(s) is not separable from α⁻¹(t) by the class.
PairRelation compute_pairs(const Morphism& m, const BaseClass& oracle);

enum class SaturationMethod { by_membership, by_closure };

/// by_membership scans every F ⊆ M with α⁻¹(F) in the class (|M| ≤ subset_cap);
/// by_closure takes the reflexive-transitive closure of `plain`, computing it
/// when null.
PairRelation compute_saturated(const Morphism& m, const BaseClass& oracle, SaturationMethod method,
                               const PairRelation* plain = nullptr,
                               std::size_t subset_cap = default_subset_cap);

/// True iff α⁻¹(F) is in the class.
bool preimage_in_class(const Morphism& m, const BaseClass& oracle, const ElementSet& subset);

struct RelationLawReport {
    bool reflexive = true;
    bool multiplicative = true;
    bool transitive = true;       // checked for saturated relations only
    bool contains_plain = true;   // checked when a plain relation is supplied
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

RelationLawReport check_relation_laws(const PairRelation& r, const Morphism& m,
                                      const PairRelation* plain = nullptr);

/// Matrix with representatives, one row per element.
std::string pairs_report(const PairRelation& r, const Morphism& m);

} // namespace polc
