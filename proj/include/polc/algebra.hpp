#pragma once

// Finite ordered monoids, morphisms from A*, and the syntactic ordered monoid
// of a regular language.

#include "polc/automata.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polc {

inline constexpr std::size_t default_monoid_cap = 5000;

/// Monoid elements are dense ids 0..n-1.
using Element = int;
/// Membership mask over the elements of a monoid.
using ElementSet = std::vector<bool>;

/// Boolean matrix over {0..n-1}², stored as one bit row per element.
class Relation {
public:
    explicit Relation(std::size_t n = 0);
    static Relation identity(std::size_t n);
    static Relation full(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    bool test(Element s, Element t) const {
        auto idx = static_cast<std::size_t>(t);
        return (row(s)[idx / 64] >> (idx % 64)) & 1u;
    }
    void set(Element s, Element t, bool value = true);

    /// True iff every pair of `other` is also in this relation.
    bool contains(const Relation& other) const;
    std::size_t count() const;
    bool is_reflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric() const;
    /// Reflexive-transitive closure, in place.
    void close_reflexive_transitive();

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    const std::uint64_t* row(Element s) const {
        return bits_.data() + static_cast<std::size_t>(s) * words_;
    }
    std::uint64_t* row(Element s) { return bits_.data() + static_cast<std::size_t>(s) * words_; }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

class FiniteMonoid {
public:
    /// `table[s * n + t]` is s·t. Throws InputError unless `neutral` is a two-sided
    /// identity; associativity is checked separately by is_associative().
    FiniteMonoid(int size, std::vector<int> table, Element neutral);

    static FiniteMonoid trivial();

    int size() const noexcept { return size_; }
    Element neutral() const noexcept { return neutral_; }
    /// Least k ≥ 1 with s^k idempotent for every s.
    int omega() const noexcept { return omega_; }

    Element multiply(Element s, Element t) const {
        return table_[static_cast<std::size_t>(s) * static_cast<std::size_t>(size_) +
                      static_cast<std::size_t>(t)];
    }
    Element multiply(Element r, Element s, Element t) const { return multiply(multiply(r, s), t); }
    Element power(Element s, int k) const;
    Element omega_power(Element s) const { return power(s, omega_); }
    bool is_idempotent(Element s) const { return multiply(s, s) == s; }
    bool is_associative() const;

    const std::vector<int>& table() const noexcept { return table_; }

private:
    int size_;
    std::vector<int> table_;
    Element neutral_;
    int omega_ = 1;
};

int idempotent_power(const FiniteMonoid& m);
std::vector<Element> idempotents(const FiniteMonoid& m);

/// True iff s ∈ F and s ≤ t imply t ∈ F.
bool is_upper_set(const ElementSet& subset, const Relation& leq);
/// s1 ≤ t1 and s2 ≤ t2 imply s1s2 ≤ t1t2, checked over all quadruples.
bool is_compatible(const Relation& leq, const FiniteMonoid& m);

/// A surjective morphism A* → M given by letter images, with a shortlex-least
/// representative word for every element and an accepting set.
class Morphism {
public:
    Morphism(Alphabet alphabet, FiniteMonoid monoid, std::vector<Element> letter_image,
             std::vector<Word> representative, ElementSet accepting,
             std::optional<Relation> order = std::nullopt);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const FiniteMonoid& monoid() const noexcept { return monoid_; }
    int size() const noexcept { return monoid_.size(); }
    Element image(Letter a) const { return letter_image_.at(static_cast<std::size_t>(a)); }
    const Word& representative(Element s) const { return representative_.at(static_cast<std::size_t>(s)); }
    std::string name(Element s) const { return alphabet_.format(representative(s)); }
    const ElementSet& accepting() const noexcept { return accepting_; }
    bool has_order() const noexcept { return order_.has_value(); }
    const Relation& order() const { return order_.value(); }
    bool leq(Element s, Element t) const { return order_.value().test(s, t); }

private:
    Alphabet alphabet_;
    FiniteMonoid monoid_;
    std::vector<Element> letter_image_;
    std::vector<Word> representative_;
    ElementSet accepting_;
    std::optional<Relation> order_;
};

Element evaluate(const Morphism& m, const Word& w);

/// α⁻¹(F) as a complete DFA whose states are the monoid elements (not minimized).
Dfa preimage_dfa(const Morphism& m, const ElementSet& subset);
Dfa preimage_dfa(const Morphism& m, Element s);

/// Transition monoid of the disjoint union of the given automata (which must share
/// an alphabet). Elements are numbered in shortlex order of their representatives,
/// so the neutral element is 0. The accepting set is empty.
Morphism transition_morphism(std::span<const Dfa> automata,
                             std::size_t cap = default_monoid_cap);

struct SyntacticData {
    Morphism morphism; // ordered by ≤_L, accepting set F = α_L(L)
    Dfa source;        // minimal DFA of L
};

/// Syntactic morphism and syntactic order of L. Throws ResourceError above `cap`.
SyntacticData syntactic(const Dfa& lang, std::size_t cap = default_monoid_cap);

/// s ≤ t iff xsy ∈ F ⇒ xty ∈ F for all elements x, y. Cubic in |M|; syntactic()
/// uses the equivalent state-inclusion route instead.
Relation order_by_contexts(const FiniteMonoid& m, const ElementSet& accepting);

/// Stable text report: elements, table, order pairs, idempotents, ω, F.
std::string monoid_report(const Morphism& m);

} // namespace polc
