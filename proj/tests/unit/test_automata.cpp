#include "polc/automata.hpp"
#include "polc/errors.hpp"
#include "polc/fixtures.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace polc;

namespace {

const Alphabet ab(U"ab");

Dfa re(const char* text) { return compile_regex(text, ab); }
Word w(const char* text) { return ab.parse_word(text); }

std::string random_regex(std::mt19937_64& rng, int depth, const std::string& letters) {
    const int pick = depth == 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 6);
    switch (pick) {
    case 0: return std::string(1, letters[rng() % letters.size()]);
    case 1: return "()";
    case 2: return "(" + random_regex(rng, depth - 1, letters) + "|" + random_regex(rng, depth - 1, letters) + ")";
    case 3: return random_regex(rng, depth - 1, letters) + random_regex(rng, depth - 1, letters);
    default: return "(" + random_regex(rng, depth - 1, letters) + ")*";
    }
}

} // namespace

TEST_CASE("alphabet rejects empty and duplicate letters") {
    CHECK_THROWS_AS(Alphabet(U""), InputError);
    CHECK_THROWS_AS(Alphabet(U"aba"), InputError);
    CHECK(Alphabet::from_utf8("αβ").size() == 2);
    CHECK(ab.format({}) == "ε");
    CHECK(ab.parse_word("ε").empty());
}

TEST_CASE("regex parsing") {
    Nfa contains_a = parse_regex("(a|b)*a(a|b)*", ab);
    CHECK(contains_a.accepts(w("bab")));
    CHECK_FALSE(contains_a.accepts(w("bbb")));
    Nfa abstar = parse_regex("(ab)*", ab);
    CHECK(abstar.accepts({}));
    CHECK(abstar.accepts(w("abab")));
    CHECK_FALSE(abstar.accepts(w("aba")));
    CHECK(parse_regex(" ( a | b ) * ", ab).accepts(w("ba")));
}

TEST_CASE("regex errors carry byte offsets") {
    try {
        parse_regex("", ab);
        FAIL("expected an error");
    } catch (const RegexError& e) {
        CHECK(e.offset() == 0);
        CHECK(std::string(e.what()).find("()") != std::string::npos);
    }
    try {
        parse_regex("ab)", ab);
        FAIL("expected an error");
    } catch (const RegexError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_regex("(ab", ab), RegexError);
    try {
        parse_regex("abc", ab);
        FAIL("expected an error");
    } catch (const RegexError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("compiled DFAs are minimal and canonical") {
    CHECK(re("(a|b)*a(a|b)*").size() == 2);
    CHECK(re("()").size() == 2);
    CHECK(re("(ab)*").size() == 3);
    CHECK(re("(a|b)*a(a|b)*") == re("b*a(a|b)*"));
    const Dfa x = re("(ab)*");
    CHECK(compile(Nfa::from_dfa(x)) == x);
    CHECK(minimize(x) == x);
    CHECK(x.initial() == 0);
}

TEST_CASE("boolean operations") {
    CHECK(equivalent(complement(re("(a|b)*a(a|b)*")), re("b*")));
    const Dfa l = re("a*b*");
    CHECK(equivalent(union_of(l, Dfa::empty(ab)), l));
    CHECK(is_empty(intersection_of(re("b*"), re("a(a|b)*"))));
    CHECK(equivalent(complement(complement(l)), l));
    const Dfa m = re("(ab)*");
    CHECK(equivalent(complement(union_of(l, m)), intersection_of(complement(l), complement(m))));
    CHECK(equivalent(complement(intersection_of(l, m)), union_of(complement(l), complement(m))));
    CHECK_THROWS_AS(union_of(l, compile_regex("a", Alphabet(U"abc"))), InputError);
}

TEST_CASE("quotients") {
    CHECK(equivalent(quotient(Side::left, re("b*"), w("b")), re("b*")));
    CHECK(is_empty(quotient(Side::left, re("b*"), w("a"))));
    CHECK(equivalent(quotient(Side::right, re("(ab)*"), w("b")), re("(ab)*a")));
    std::mt19937_64 rng(3);
    for (const auto& f : fixtures())
        for (int i = 0; i < 30; ++i) {
            Word u = random_word(rng, 2, 3), v = random_word(rng, 2, 6);
            CHECK(accepts(quotient(Side::left, f.language, u), v) == oracle::member(f.language, oracle::concat(u, v)));
            CHECK(accepts(quotient(Side::right, f.language, u), v) == oracle::member(f.language, oracle::concat(v, u)));
        }
}

TEST_CASE("comparisons") {
    CHECK(compare(Comparison::is_empty, intersection_of(re("b*"), re("a(a|b)*"))));
    CHECK(equivalent(re("(ab)*"), re("(ab)*")));
    CHECK(includes(re("(a|b)*"), re("(ab)*")));
    CHECK_FALSE(includes(re("(ab)*"), re("(a|b)*")));
    auto cx = counterexample(re("(ab)*"), re("(a|b)*"));
    REQUIRE(cx);
    CHECK(ab.format(*cx) == "a");
    CHECK_FALSE(counterexample(re("(a|b)*"), re("(ab)*")));
    CHECK(shortest_word(re("(a|b)*ab")) == std::optional<Word>(w("ab")));
}

TEST_CASE("concatenation and marked concatenation") {
    const Dfa all = re("(a|b)*");
    CHECK(equivalent(marked_concatenate(all, 0, all), re("(a|b)*a(a|b)*")));
    CHECK(equivalent(concatenate(re("b*"), re("b*")), re("b*")));
    CHECK(equivalent(concatenate(re("a"), re("b")), re("ab")));
}

TEST_CASE("upward closure") {
    const Dfa l = re("(a|b)*a(a|b)*");
    CHECK(equivalent(upward_closure(l), l));
    CHECK_FALSE(equivalent(upward_closure(re("(ab)*")), re("(ab)*")));
    CHECK(is_empty(upward_closure(Dfa::empty(ab))));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        Dfa d = random_dfa(rng, 4, 2);
        Dfa u = upward_closure(d);
        CHECK(includes(u, d));
        CHECK(equivalent(upward_closure(u), u));
        CHECK(oracle::upward_closed_up_to(u, 5));
    }
}

TEST_CASE("membership") {
    CHECK(accepts(re("b*"), w("bb")));
    CHECK_FALSE(accepts(re("b*"), w("ab")));
    CHECK(accepts(re("(ab)*"), {}));
}

TEST_CASE("random regexes agree with direct NFA simulation") {
    std::mt19937_64 rng(11);
    const Alphabet abc(U"abc");
    for (int i = 0; i < 60; ++i) {
        const std::string text = random_regex(rng, 5, "abc");
        Nfa nfa = parse_regex(text, abc);
        Dfa dfa = compile(nfa);
        for (const Word& x : words_up_to(3, 6)) REQUIRE_MESSAGE(nfa.accepts(x) == accepts(dfa, x), text);
        CHECK(compile(Nfa::from_dfa(dfa)) == dfa);
    }
}

TEST_CASE("DFA text format round trip") {
    const char* text = "alphabet: ab\nstates: 3\ninitial: 0\nfinals: 0\n0 a 1\n0 b 2\n1 a 2\n1 b 0\n2 a 2\n2 b 2\n";
    Dfa d = parse_dfa_text(text);
    CHECK(equivalent(d, re("(ab)*")));
    CHECK(to_text(d) == text);
    CHECK(parse_dfa_text(to_text(re("a*b*"))) == re("a*b*"));
    CHECK_THROWS_AS(parse_dfa_text("alphabet: ab\nstates: 1\ninitial: 0\nfinals:\n0 a 0\n"), InputError);
    CHECK_THROWS_AS(parse_dfa_text("alphabet: ab\nstates: 1\ninitial: 0\nfinals:\n0 a 0\n0 a 0\n0 b 0\n"), InputError);
}
