#include "polc/fixtures.hpp"
#include "polc/forest.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace polc;

namespace {

const Alphabet ab(U"ab");

// Minimum height by exhaustive recursion over all forest shapes.
int brute_height(const Morphism& m, const Word& w, std::size_t i, std::size_t j) {
    if (j - i <= 1) return 0;
    const FiniteMonoid& mon = m.monoid();
    auto value = [&](std::size_t x, std::size_t y) { return evaluate(m, Word(w.begin() + x, w.begin() + y)); };
    int best = 1 << 20;
    for (std::size_t k = i + 1; k < j; ++k)
        best = std::min(best, 1 + std::max(brute_height(m, w, i, k), brute_height(m, w, k, j)));
    const Element e = value(i, j);
    if (!mon.is_idempotent(e)) return best;
    // Every decomposition into ≥ 2 segments that all map to e.
    std::function<int(std::size_t, int)> chains = [&](std::size_t start, int segments) {
        if (start == j) return segments >= 2 ? 0 : 1 << 20;
        int h = 1 << 20;
        for (std::size_t k = start + 1; k <= j; ++k) {
            if ((start == i && k == j) || value(start, k) != e) continue;
            h = std::min(h, std::max(brute_height(m, w, start, k), chains(k, segments + 1)));
        }
        return h;
    };
    return std::min(best, 1 + chains(i, 0));
}

} // namespace

TEST_CASE("forest base cases") {
    SyntacticData sd = syntactic(fixture("A*aA*"));
    Forest f = build_forest(sd.morphism, {});
    CHECK(f.nodes.size() == 1);
    CHECK(forest_height(f) == 0);
    CHECK(validate_forest(f, sd.morphism, {}).valid);
    Word single = ab.parse_word("a");
    CHECK(forest_height(build_forest(sd.morphism, single)) == 0);
}

TEST_CASE("idempotent node over bbb") {
    SyntacticData sd = syntactic(fixture("A*aA*"));
    Word w = ab.parse_word("bbb");
    Forest f = build_forest(sd.morphism, w);
    ForestReport r = validate_forest(f, sd.morphism, w);
    CHECK(r.valid);
    CHECK(r.height == 1);
    CHECK(f.nodes[f.root].kind == ForestNode::Kind::idempotent);
    CHECK(f.nodes[f.root].children.size() == 3);
    CHECK(dump_forest(f, sd.morphism) == "idempotent bbb -> ε\n  leaf b -> ε\n  leaf b -> ε\n  leaf b -> ε\n");
}

TEST_CASE("forests of (ab)* stay within the bound") {
    SyntacticData sd = syntactic(fixture("(ab)*"));
    Word w = ab.parse_word("abab");
    ForestReport r = validate_forest(build_forest(sd.morphism, w), sd.morphism, w);
    CHECK(r.valid);
    CHECK(r.height <= 17);
}

TEST_CASE("forest heights are optimal on short words") {
    std::mt19937_64 rng(37);
    for (const auto& f : fixtures()) {
        const SyntacticData sd = syntactic(f.language);
        const Morphism& m = sd.morphism;
        for (int i = 0; i < 15; ++i) {
            Word w = random_word(rng, 2, 7);
            Forest forest = build_forest(m, w);
            CHECK(validate_forest(forest, m, w).valid);
            CHECK(forest_height(forest) == brute_height(m, w, 0, w.size()));
        }
    }
}

TEST_CASE("validator rejects malformed forests") {
    SyntacticData sd = syntactic(fixture("A*aA*"));
    const Morphism& m = sd.morphism;
    Word w = ab.parse_word("ab");
    const Element one = m.monoid().neutral(), s = evaluate(m, ab.parse_word("a"));

    Forest mixed{w, {{ForestNode::Kind::leaf, 0, 1, s, {}}, {ForestNode::Kind::leaf, 1, 2, one, {}},
                     {ForestNode::Kind::idempotent, 0, 2, s, {0, 1}}}, 2};
    ForestReport r = validate_forest(mixed, m, w);
    CHECK_FALSE(r.valid);

    Forest long_leaf{w, {{ForestNode::Kind::leaf, 0, 2, s, {}}}, 0};
    CHECK_FALSE(validate_forest(long_leaf, m, w).valid);

    Word bb = ab.parse_word("bb");
    Forest two{bb, {{ForestNode::Kind::leaf, 0, 1, one, {}}, {ForestNode::Kind::leaf, 1, 2, one, {}},
                    {ForestNode::Kind::idempotent, 0, 2, one, {0, 1}}}, 2};
    CHECK(validate_forest(two, m, bb).valid);

    Forest gap{w, {{ForestNode::Kind::leaf, 0, 1, s, {}}, {ForestNode::Kind::leaf, 0, 1, s, {}},
                   {ForestNode::Kind::binary, 0, 2, s, {0, 1}}}, 2};
    CHECK_FALSE(validate_forest(gap, m, w).valid);
}

TEST_CASE("random words on fixture morphisms") {
    std::mt19937_64 rng(41);
    for (const auto& f : fixtures()) {
        const SyntacticData sd = syntactic(f.language);
        const Morphism& m = sd.morphism;
        for (int i = 0; i < 100; ++i) {
            Word w = random_word(rng, 2, 50);
            Forest forest = build_forest(m, w);
            ForestReport r = validate_forest(forest, m, w);
            CHECK(r.valid);
            CHECK(r.height <= 3 * m.size() - 1);
            CHECK(forest.nodes[forest.root].value == evaluate(m, w));
        }
    }
}
