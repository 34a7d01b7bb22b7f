#pragma once

// Membership in Pol(C), co-Pol(C) and UPol(C) from the syntactic ordered monoid.

#include "polc/algebra.hpp"
#include "polc/pairs.hpp"

#include <optional>
#include <string>
#include <utility>

namespace polc {

enum class Level { pol, copol, upol };

std::string level_name(Level level);
Level parse_level(const std::string& text);

struct Violation {
    Element s = 0;
    Element t = 0;
    Element lhs = 0; // s^{ω+1}, or e for the idempotent form
    Element rhs = 0; // s^ω t s^ω, or ete
    Word s_word;
    Word t_word;
    bool idempotent_form = false;
};

struct Verdict {
    Level level = Level::pol;
    bool answer = true;
    std::optional<Violation> violation;
    std::string equation; // identifier of the characterization applied
};

/// s^{ω+1} ≤ s^ω t s^ω over all pairs, cross-checked against e ≤ ete over pairs
/// with e idempotent. Throws TheoremViolation if the two forms disagree.
Verdict decide_pol(const SyntacticData& sd, const PairRelation& pairs);
/// Same with the reversed inequalities.
Verdict decide_copol(const SyntacticData& sd, const PairRelation& pairs);
/// s^{ω+1} = s^ω t s^ω over the plain pairs and, when given, over the saturated pairs.
Verdict decide_upol(const SyntacticData& sd, const PairRelation& plain,
                    const PairRelation* saturated = nullptr);

enum class EquationForm { general, idempotent };

/// First (s, t) in id order with (s, t) ∈ pairs violating s^{ω+1} ≤ s^ω t s^ω
/// (general) or e ≤ ete (idempotent, e = s), for an arbitrary order relation.
/// `reversed` flips the inequality.
std::optional<std::pair<Element, Element>> first_violation(const FiniteMonoid& m, const Relation& order,
                                                           const Relation& pairs, EquationForm form,
                                                           bool reversed = false);

/// One-line human form of a violation, e.g. `e = ab, t = a: e ≰ ete = ...`.
std::string describe(const Verdict& v, const Morphism& m);

} // namespace polc
