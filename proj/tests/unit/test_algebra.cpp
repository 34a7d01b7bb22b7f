#include "polc/algebra.hpp"
#include "polc/errors.hpp"
#include "polc/fixtures.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace polc;

namespace {

const Alphabet ab(U"ab");
Word w(const char* text) { return ab.parse_word(text); }

std::vector<std::vector<int>> table_of(const FiniteMonoid& m) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(m.size()));
    for (Element s = 0; s < m.size(); ++s)
        for (Element u = 0; u < m.size(); ++u) t[static_cast<std::size_t>(s)].push_back(m.multiply(s, u));
    return t;
}

} // namespace

TEST_CASE("syntactic monoid of A*aA*") {
    SyntacticData sd = syntactic(fixture("A*aA*"));
    const Morphism& m = sd.morphism;
    REQUIRE(m.size() == 2);
    CHECK(m.monoid().omega() == 1);
    const Element one = m.monoid().neutral(), s = evaluate(m, w("a"));
    CHECK(one == 0);
    CHECK(m.accepting() == ElementSet{false, true});
    CHECK(m.leq(one, s));
    CHECK_FALSE(m.leq(s, one));
    CHECK(is_upper_set({false, true}, m.order()));
    CHECK_FALSE(is_upper_set({true, false}, m.order()));
    CHECK(is_upper_set({true, true}, m.order()));
    CHECK(idempotents(m.monoid()).size() == 2);
}

TEST_CASE("syntactic monoid of (ab)*") {
    SyntacticData sd = syntactic(fixture("(ab)*"));
    const Morphism& m = sd.morphism;
    REQUIRE(m.size() == 6);
    std::vector<std::string> names;
    for (Element s = 0; s < m.size(); ++s) names.push_back(m.name(s));
    CHECK(names == std::vector<std::string>{"ε", "a", "b", "aa", "ab", "ba"});
    CHECK(m.monoid().omega() == 2);
    CHECK(std::count(m.accepting().begin(), m.accepting().end(), true) == 2);
    CHECK(m.accepting()[0]);
    CHECK(m.accepting()[static_cast<std::size_t>(evaluate(m, w("ab")))]);
    auto idem = idempotents(m.monoid());
    std::vector<std::string> idem_names;
    for (Element e : idem) idem_names.push_back(m.name(e));
    CHECK(idem_names == std::vector<std::string>{"ε", "aa", "ab", "ba"});
    CHECK(evaluate(m, w("abab")) == evaluate(m, w("ab")));
    CHECK(evaluate(m, w("aa")) == evaluate(m, w("bb")));
    CHECK(evaluate(m, {}) == m.monoid().neutral());
}

TEST_CASE("syntactic monoid of A*") {
    SyntacticData sd = syntactic(fixture("A*"));
    CHECK(sd.morphism.size() == 1);
    CHECK(sd.morphism.accepting() == ElementSet{true});
    CHECK(FiniteMonoid::trivial().omega() == 1);
}

TEST_CASE("monoid cap is enforced") {
    CHECK_THROWS_AS(syntactic(fixture("(ab)*"), 5), ResourceError);
}

TEST_CASE("fixture monoids agree with the brute-force congruence") {
    for (const auto& f : fixtures()) {
        CAPTURE(f.name);
        SyntacticData sd = syntactic(f.language);
        const Morphism& m = sd.morphism;
        CHECK(static_cast<std::size_t>(m.size()) == oracle::congruence_classes(f.language, 5, 4));
        CHECK(m.monoid().omega() == oracle::omega(table_of(m.monoid())));
        CHECK(m.monoid().is_associative());
        CHECK(is_compatible(m.order(), m.monoid()));
        CHECK(is_upper_set(m.accepting(), m.order()));
        CHECK(m.order() == order_by_contexts(m.monoid(), m.accepting()));
        CHECK(m.order().is_reflexive());
        CHECK(m.order().is_transitive());
        CHECK(m.order().is_antisymmetric());
        for (Element s = 0; s < m.size(); ++s) {
            CHECK(evaluate(m, m.representative(s)) == s);
            const Element sw = m.monoid().omega_power(s);
            CHECK(m.monoid().is_idempotent(sw));
            CHECK(m.monoid().multiply(sw, s) == m.monoid().power(s, m.monoid().omega() + 1));
            for (Element t = 0; t < m.size(); ++t)
                CHECK(m.leq(s, t) == oracle::syntactic_leq(f.language, m.representative(s), m.representative(t), 4));
        }
        for (const Word& x : words_up_to(2, 8))
            REQUIRE(oracle::member(f.language, x) == m.accepting()[static_cast<std::size_t>(evaluate(m, x))]);
    }
}

TEST_CASE("random monoids: omega and morphism laws") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        SyntacticData sd = random_syntactic(rng, 4, 2 + static_cast<std::size_t>(i % 2), 200);
        const Morphism& m = sd.morphism;
        CHECK(m.monoid().omega() == oracle::omega(table_of(m.monoid())));
        CHECK(m.order() == order_by_contexts(m.monoid(), m.accepting()));
        for (int j = 0; j < 20; ++j) {
            Word u = random_word(rng, m.alphabet().size(), 5), v = random_word(rng, m.alphabet().size(), 5);
            CHECK(evaluate(m, oracle::concat(u, v)) == m.monoid().multiply(evaluate(m, u), evaluate(m, v)));
        }
    }
}

TEST_CASE("omega of Z2 x {1, y, y², 0}") {
    // Least idempotent exponents are 1, 2, 3 and 4, yet ω = 4.
    auto nil = [](int i, int j) { return std::min(i + j, 3); };
    std::vector<int> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            table[static_cast<std::size_t>(a * 8 + b)] = ((a / 4 + b / 4) % 2) * 4 + nil(a % 4, b % 4);
    FiniteMonoid m(8, table, 0);
    CHECK(m.is_associative());
    CHECK(m.omega() == 4);
    CHECK(m.omega() == oracle::omega(table_of(m)));
    CHECK(idempotent_power(m) == 4);
}

TEST_CASE("relation closure") {
    Relation r(4);
    r.set(0, 1);
    r.set(1, 2);
    r.close_reflexive_transitive();
    CHECK(r.test(0, 2));
    CHECK(r.test(3, 3));
    CHECK_FALSE(r.test(2, 0));
    CHECK(r.is_transitive());
    CHECK(Relation::full(3).count() == 9);
    CHECK(Relation::full(3).contains(Relation::identity(3)));
}

TEST_CASE("monoid report lists the sections") {
    const std::string text = monoid_report(syntactic(fixture("(ab)*")).morphism);
    for (const char* section : {"elements: 6", "table:", "order:", "idempotents: ε aa ab ba", "omega: 2", "accepting: ε ab"})
        CHECK(text.find(section) != std::string::npos);
}
