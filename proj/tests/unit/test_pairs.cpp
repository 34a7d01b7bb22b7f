#include "polc/baseclass.hpp"
#include "polc/errors.hpp"
#include "polc/fixtures.hpp"
#include "polc/pairs.hpp"

#include <doctest.h>

#include <random>

using namespace polc;

namespace {

const Alphabet ab(U"ab");
Word w(const char* text) { return ab.parse_word(text); }

} // namespace

TEST_CASE("pairs of A*aA*") {
    SyntacticData sd = syntactic(fixture("A*aA*"));
    TrivialClass st(ab);
    AlphabetTestableClass at(ab);
    CHECK(compute_pairs(sd.morphism, st).bits.count() == 4);
    CHECK(compute_pairs(sd.morphism, at).bits == Relation::identity(2));
    PairRelation sat = compute_saturated(sd.morphism, at, SaturationMethod::by_membership);
    CHECK(sat.kind == PairRelation::Kind::saturated);
    CHECK(sat.bits == Relation::identity(2));
}

TEST_CASE("AT pairs of (ab)*") {
    SyntacticData sd = syntactic(fixture("(ab)*"));
    const Morphism& m = sd.morphism;
    AlphabetTestableClass at(ab);
    PairRelation r = compute_pairs(m, at);
    CHECK(r.test(evaluate(m, w("ab")), evaluate(m, w("ba"))));
    CHECK(r.test(evaluate(m, w("ab")), evaluate(m, w("aba"))));
    CHECK_FALSE(r.test(m.monoid().neutral(), evaluate(m, w("ab"))));
    PairRelation by_closure = compute_saturated(m, at, SaturationMethod::by_closure, &r);
    PairRelation by_membership = compute_saturated(m, at, SaturationMethod::by_membership);
    CHECK(by_closure.bits == by_membership.bits);
    RelationLawReport laws = check_relation_laws(r, m);
    CHECK(laws.reflexive);
    CHECK(laws.multiplicative);
    CHECK(check_relation_laws(by_membership, m, &r).ok());
}

TEST_CASE("ST saturated pairs are full") {
    TrivialClass st(ab);
    for (const auto& f : fixtures()) {
        SyntacticData sd = syntactic(f.language);
        if (sd.morphism.size() > 8) continue;
        for (auto method : {SaturationMethod::by_membership, SaturationMethod::by_closure})
            CHECK(compute_saturated(sd.morphism, st, method).bits == Relation::full(sd.morphism.size()));
        CHECK(check_relation_laws(compute_pairs(sd.morphism, st), sd.morphism).ok());
    }
}

TEST_CASE("closed forms match per-cell separation") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        SyntacticData sd = random_syntactic(rng, 4, 2 + static_cast<std::size_t>(i % 2), 60);
        TrivialClass st(sd.morphism.alphabet());
        AlphabetTestableClass at(sd.morphism.alphabet());
        CHECK(st.inseparable_preimages(sd.morphism) == inseparable_preimages_by_separation(st, sd.morphism));
        CHECK(at.inseparable_preimages(sd.morphism) == inseparable_preimages_by_separation(at, sd.morphism));
    }
}

TEST_CASE("subset enumeration cap") {
    SyntacticData sd = syntactic(fixture("(ab)*"));
    AlphabetTestableClass at(ab);
    CHECK_THROWS_AS(compute_saturated(sd.morphism, at, SaturationMethod::by_membership, nullptr, 4), ResourceError);
}

TEST_CASE("law report flags broken relations") {
    SyntacticData sd = syntactic(fixture("(ab)*"));
    Relation r = Relation::identity(6);
    r.set(0, 0, false);
    CHECK_FALSE(check_relation_laws({PairRelation::Kind::plain, r}, sd.morphism).reflexive);
    Relation nm = Relation::identity(6);
    nm.set(1, 2); // (a, b) without (aa, ba)
    CHECK_FALSE(check_relation_laws({PairRelation::Kind::plain, nm}, sd.morphism).multiplicative);
    Relation nt = Relation::identity(6);
    nt.set(1, 2);
    nt.set(2, 3);
    CHECK_FALSE(check_relation_laws({PairRelation::Kind::saturated, nt}, sd.morphism).transitive);
}
