#pragma once

// Base classes C: an oracle for membership and separation, plus the extra
// structure available when C is a finite quotienting lattice.

#include "polc/algebra.hpp"
#include "polc/automata.hpp"
#include "polc/polexpr.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polc {

inline constexpr std::size_t default_lattice_cap = 4096;

class FiniteLattice;

/// Oracle interface for a quotienting lattice C over a fixed alphabet.
///
/// separate() must be sound: a returned K satisfies L1 ⊆ K, K ∩ L2 = ∅ and
/// member(K). Implementations are immutable and safe to share across threads.
class BaseClass {
public:
    virtual ~BaseClass() = default;

    virtual std::string name() const = 0;
    virtual const Alphabet& alphabet() const = 0;
    virtual bool member(const Dfa& lang) const = 0;
    virtual std::optional<Dfa> separate(const Dfa& l1, const Dfa& l2) const = 0;

    /// (s, t) is set iff α⁻¹(s) is not C-separable from α⁻¹(t). The default asks
    /// separate() once per cell; classes with a closed form override it.
    virtual Relation inseparable_preimages(const Morphism& m) const;

    /// Non-null for explicit finite lattices.
    virtual const FiniteLattice* lattice() const { return nullptr; }

protected:
    void require_alphabet(const Dfa& lang) const;
};

/// Same as BaseClass::inseparable_preimages' default: one separate() per cell.
Relation inseparable_preimages_by_separation(const BaseClass& oracle, const Morphism& m);

/// The trivial lattice {∅, A*}.
class TrivialClass final : public BaseClass {
public:
    explicit TrivialClass(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    std::string name() const override { return "ST"; }
    const Alphabet& alphabet() const override { return alphabet_; }
    bool member(const Dfa& lang) const override;
    std::optional<Dfa> separate(const Dfa& l1, const Dfa& l2) const override;
    Relation inseparable_preimages(const Morphism& m) const override;

private:
    Alphabet alphabet_;
};

/// Letter sets as bit masks over the alphabet.
using LetterSet = std::uint32_t;
inline constexpr std::size_t max_profile_letters = 16;

/// {alph(w) | w ∈ L}, sorted.
std::vector<LetterSet> alphabet_profiles(const Dfa& lang);
/// {w | alph(w) ∈ profiles}.
Dfa alphabet_class_union(const Alphabet& alphabet, const std::vector<LetterSet>& profiles);

/// Alphabet-testable languages: membership depends only on the set of letters used.
class AlphabetTestableClass final : public BaseClass {
public:
    explicit AlphabetTestableClass(Alphabet alphabet);
    std::string name() const override { return "AT"; }
    const Alphabet& alphabet() const override { return alphabet_; }
    bool member(const Dfa& lang) const override;
    std::optional<Dfa> separate(const Dfa& l1, const Dfa& l2) const override;
    Relation inseparable_preimages(const Morphism& m) const override;

    /// Least AT language containing L.
    Dfa least_superset(const Dfa& lang) const;

private:
    Alphabet alphabet_;
};

/// A finite quotienting lattice, stored as pairwise inequivalent minimal DFAs.
class FiniteLattice {
public:
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Dfa>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::optional<std::size_t> find(const Dfa& lang) const;

    /// Exhaustive closure check over pairs and single-letter quotients.
    bool is_closed() const;

private:
    friend FiniteLattice saturate_lattice(std::span<const Dfa>, std::size_t);
    explicit FiniteLattice(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    bool insert(Dfa lang, std::size_t cap);

    Alphabet alphabet_;
    std::vector<Dfa> elements_;
    std::vector<std::string> keys_; // canonical text, parallel to elements_
};

/// Least quotienting lattice containing the generators (plus ∅ and A*).
/// Throws ResourceError beyond `cap` elements.
FiniteLattice saturate_lattice(std::span<const Dfa> generators,
                               std::size_t cap = default_lattice_cap);

class LatticeClass final : public BaseClass {
public:
    explicit LatticeClass(FiniteLattice lattice, std::string name = "lattice")
        : lattice_(std::move(lattice)), name_(std::move(name)) {}
    std::string name() const override { return name_; }
    const Alphabet& alphabet() const override { return lattice_.alphabet(); }
    bool member(const Dfa& lang) const override;
    std::optional<Dfa> separate(const Dfa& l1, const Dfa& l2) const override;
    const FiniteLattice* lattice() const override { return &lattice_; }

    /// Intersection of all elements containing L.
    Dfa least_superset(const Dfa& lang) const;

private:
    FiniteLattice lattice_;
    std::string name_;
};

/// Canonical preorder of a finite lattice: u ≤ v iff every element containing u
/// contains v. Words are compared through their membership profiles, and the
/// period is the idempotent power of the profile monoid.
class CanonicalPreorder {
public:
    explicit CanonicalPreorder(FiniteLattice lattice, std::size_t monoid_cap = default_monoid_cap);

    const FiniteLattice& lattice() const noexcept { return lattice_; }
    /// Morphism onto the transition monoid of the disjoint union of all elements.
    const Morphism& profile_morphism() const noexcept { return profile_morphism_; }

    std::vector<bool> profile(const Word& w) const;
    bool leq(const Word& u, const Word& v) const;
    /// The preorder lifted to profile-monoid elements.
    bool leq(Element s, Element t) const;
    int period() const noexcept { return profile_morphism_.monoid().omega(); }

private:
    FiniteLattice lattice_;
    Morphism profile_morphism_;
    std::vector<std::vector<bool>> element_profiles_;
};

struct CharPropertySample {
    Word x, u, v, y;
    int ell = 0;
    bool premise = false;    // x u^{pℓ+1} y ∈ L
    bool conclusion = false; // x u^{pℓ} v u^{pℓ} y ∈ L
};

struct CharPropertyReport {
    int h = 0;
    int p = 0;
    std::size_t samples = 0;
    std::size_t premise_held = 0;
    std::vector<CharPropertySample> violations;
};

/// Sampled check of xu^{pℓ+1}y ∈ L ⇒ xu^{pℓ}vu^{pℓ}y ∈ L for u ≤ v and
/// ℓ ∈ {h, h+1, h+2}, where h = 2n+1 and n bounds the concatenations in the
/// products of `expr`. `expr` must denote L (InputError otherwise).
CharPropertyReport check_char_property(const Dfa& lang, const CanonicalPreorder& preorder,
                                       const PolExpr& expr, std::size_t samples,
                                       std::uint64_t seed);

/// Parses a class spec: `st`, `at`, or `lattice:<path>` (directory of .dfa/.regex
/// files, or a manifest with `dfa: <path>` / `regex: <expr>` lines).
std::unique_ptr<BaseClass> make_class(const std::string& spec, const Alphabet& alphabet);

/// Generators named by a `lattice:` path.
std::vector<Dfa> load_generators(const std::string& path, const Alphabet& alphabet);

} // namespace polc
