#pragma once

// Pol(C) witnesses: separator languages K_e and the level-by-level expressions
// H_{s,h} whose union over the accepting set denotes L.

#include "polc/algebra.hpp"
#include "polc/baseclass.hpp"
#include "polc/pairs.hpp"
#include "polc/polexpr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polc {

struct NamedDfa {
    std::string name;
    Dfa language;
};

/// K_e = ⋂ { G_t | (e, t) not a pair }, G_t the oracle's separator of α⁻¹(e)
/// from α⁻¹(t); A* when no such t exists.
NamedDfa compute_Ke(Element e, const Morphism& m, const BaseClass& oracle, const PairRelation& pairs);

struct LevelStats {
    int level = 0;
    int largest_automaton = 0; // states of the largest H_{s,level}
    int union_states = 0;      // states of ⋃_{s∈F} H_{s,level}
    bool sound = true;         // union ⊆ L
    bool equivalent = false;   // union ≡ L
};

struct SynthesisResult {
    std::vector<PolExpr> elements;    // H_{s,level} per element at the final level
    std::vector<Dfa> element_dfas;    // their minimal DFAs
    std::vector<NamedDfa> bases;      // K languages used, in creation order
    PolExpr expression;               // ⋃_{s∈F} H_{s,level}
    Dfa language;                     // its minimal DFA
    int level = 0;
    int bound = 0;                    // 3|M| − 1
    bool verified = false;
    std::vector<LevelStats> stats;
};

/// Builds levels 0, 1, … and stops at the first level whose union is equivalent
/// to L, or at min(3|M|−1, max_h). Throws TheoremViolation when the bound (or a
/// fixpoint) is reached without equivalence, and ResourceError past `state_cap`.
SynthesisResult synthesize(const SyntacticData& sd, const BaseClass& oracle, const PairRelation& pairs,
                           std::optional<int> max_h = std::nullopt,
                           std::size_t state_cap = default_state_cap);

/// Checks that `words` of length ≤ max_length in `h` all satisfy s ≤ α(w).
bool sound_for(const Morphism& m, Element s, const Dfa& h, std::size_t max_length = 8);

/// Denotation ≡ L, and every H_s sound on words of length ≤ 8.
bool verify_witness(const SyntacticData& sd, const SynthesisResult& r);

} // namespace polc
