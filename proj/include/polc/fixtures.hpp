#pragma once

// Built-in sample languages and seeded random generators shared by the law
// runner and the test suites.

#include "polc/algebra.hpp"
#include "polc/automata.hpp"
#include "polc/baseclass.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace polc {

struct Fixture {
    std::string name;
    Dfa language;
};

/// Languages over {a, b}: A*aA*, (ab)*, b*, A*, ε, a*b*, A*aA*bA*, aA*, A*ab,
/// (aa|b)*, ∅.
std::vector<Fixture> fixtures();

/// Regex fixture by name; throws InputError when unknown.
Dfa fixture(const std::string& name);

/// Minimal DFA with a uniformly drawn state count in [1, max_states], random
/// transitions and random final states, over the first `letters` of "abc…".
Dfa random_dfa(std::mt19937_64& rng, int max_states, std::size_t letters);

/// Syntactic morphism of a random DFA whose monoid has at most `max_size` elements.
SyntacticData random_syntactic(std::mt19937_64& rng, int max_states, std::size_t letters, int max_size);

/// Lattice generated by one random DFA over `alphabet`, redrawn until the
/// closure has at most `cap` elements.
FiniteLattice random_lattice(std::mt19937_64& rng, const Alphabet& alphabet, int max_states, std::size_t cap);

Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_length);

/// Smallest relation containing the identity and `seeds` that is closed under
/// s1 R t1, s2 R t2 ⇒ s1s2 R t1t2.
Relation multiplicative_closure(const FiniteMonoid& m, Relation seeds);

} // namespace polc
