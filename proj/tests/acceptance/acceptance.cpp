// Acceptance run: one PASS/FAIL line per criterion.

#include "polc/baseclass.hpp"
#include "polc/cli.hpp"
#include "polc/decide.hpp"
#include "polc/errors.hpp"
#include "polc/fixtures.hpp"
#include "polc/forest.hpp"
#include "polc/pairs.hpp"
#include "polc/witness.hpp"

#include "../support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace polc;

namespace {

using Clock = std::chrono::steady_clock;

int theorem_violations = 0;
int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << title << ": " << detail << std::endl;
    if (!ok) ++failures;
}

// Runs `body`, counting theorem self-check trips as failures of the criterion.
bool guarded(const std::function<bool()>& body, std::string& detail) {
    try {
        return body();
    } catch (const TheoremViolation& e) {
        ++theorem_violations;
        detail += std::string(" theorem violation: ") + e.what();
        return false;
    } catch (const std::exception& e) {
        detail += std::string(" error: ") + e.what();
        return false;
    }
}

std::vector<Dfa> random_corpus() {
    std::mt19937_64 rng(20240601);
    std::vector<Dfa> out;
    // Every tenth draw is unrestricted; the others are redrawn until the minimal DFA has ≥ 2 states.
    for (int i = 0; i < 200; ++i) {
        Dfa d = random_dfa(rng, 5, 1 + rng() % 3);
        while (i % 10 != 0 && d.size() < 2) d = random_dfa(rng, 5, 1 + rng() % 3);
        out.push_back(d);
    }
    return out;
}

struct Analysed {
    Dfa language;
    SyntacticData sd;
};

bool universal(const Dfa& d) { return is_empty(complement(d)); }

std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

// Structural check written against the definition, independent of validate_forest.
bool forest_ok(const Forest& f, const Morphism& m, const Word& w) {
    const FiniteMonoid& mon = m.monoid();
    std::function<bool(std::size_t)> ok = [&](std::size_t i) {
        const ForestNode& x = f.nodes[i];
        Word label(w.begin() + static_cast<std::ptrdiff_t>(x.begin), w.begin() + static_cast<std::ptrdiff_t>(x.end));
        if (x.kind == ForestNode::Kind::leaf) return label.size() <= 1 && x.children.empty();
        if (x.kind == ForestNode::Kind::binary && x.children.size() != 2) return false;
        if (x.kind == ForestNode::Kind::idempotent && x.children.size() < 2) return false;
        Word joined;
        std::vector<Element> values;
        for (std::size_t c : x.children) {
            const ForestNode& y = f.nodes[c];
            joined.insert(joined.end(), w.begin() + static_cast<std::ptrdiff_t>(y.begin),
                          w.begin() + static_cast<std::ptrdiff_t>(y.end));
            Element v = mon.neutral();
            for (std::size_t p = y.begin; p < y.end; ++p) v = mon.multiply(v, m.image(w[p]));
            values.push_back(v);
            if (!ok(c)) return false;
        }
        if (joined != label) return false;
        if (x.kind == ForestNode::Kind::idempotent)
            for (Element v : values)
                if (v != values.front() || !mon.is_idempotent(v)) return false;
        return true;
    };
    const ForestNode& root = f.nodes[f.root];
    return root.begin == 0 && root.end == w.size() && ok(f.root);
}

} // namespace

int main() {
    const std::vector<Dfa> corpus = random_corpus();
    const std::vector<Fixture> fixture_list = fixtures();
    const Alphabet ab(U"ab");

    std::vector<Analysed> analysed;

    // 1
    {
        auto start = Clock::now();
        for (const Dfa& d : corpus) analysed.push_back({d, syntactic(d)});
        int disagreements = 0, in_pol = 0, largest = 0;
        std::string detail;
        bool ok = guarded([&] {
            for (const auto& a : analysed) {
                TrivialClass st(a.language.alphabet());
                const bool pol = decide_pol(a.sd, compute_pairs(a.sd.morphism, st)).answer;
                const bool closed = equivalent(a.language, upward_closure(a.language));
                in_pol += pol;
                largest = std::max(largest, a.sd.morphism.size());
                if (pol != closed) ++disagreements;
            }
            return disagreements == 0;
        }, detail);
        const double t = seconds_since(start);
        report(1, "Pol(ST) agrees with upward closure", ok && t < 30,
               std::to_string(disagreements) + " disagreements over 200 DFAs (" + std::to_string(in_pol) +
                   " in Pol(ST), largest |M| " + std::to_string(largest) + ") in " + str(t) + " s" + detail);
    }

    // 2
    {
        int disagreements = 0;
        std::string detail;
        bool ok = guarded([&] {
            for (const auto& a : analysed) {
                TrivialClass st(a.language.alphabet());
                SyntacticData co = syntactic(complement(a.language));
                const bool copol = decide_copol(a.sd, compute_pairs(a.sd.morphism, st)).answer;
                const bool pol_co = decide_pol(co, compute_pairs(co.morphism, st)).answer;
                if (copol != pol_co) ++disagreements;
            }
            return disagreements == 0;
        }, detail);
        report(2, "co-Pol(ST) is Pol(ST) of the complement", ok,
               std::to_string(disagreements) + " disagreements over 200 DFAs" + detail);
    }

    // 3
    {
        int disagreements = 0, trivial = 0;
        std::string detail;
        bool ok = guarded([&] {
            for (const auto& a : analysed) {
                TrivialClass st(a.language.alphabet());
                PairRelation plain = compute_pairs(a.sd.morphism, st);
                PairRelation sat = compute_saturated(a.sd.morphism, st, SaturationMethod::by_closure, &plain);
                const bool upol = decide_upol(a.sd, plain, &sat).answer;
                const bool expected = is_empty(a.language) || universal(a.language);
                trivial += expected;
                if (upol != expected) ++disagreements;
            }
            return disagreements == 0;
        }, detail);
        report(3, "UPol(ST) holds exactly for the empty and full languages", ok,
               std::to_string(disagreements) + " disagreements over 200 DFAs (" + std::to_string(trivial) +
                   " trivial)" + detail);
    }

    // 4 and 5
    {
        int runs = 0, unverified = 0, unsound_levels = 0, levels = 0;
        double slowest = 0;
        std::string detail;
        std::vector<std::pair<std::string, Dfa>> inputs;
        for (const auto& f : fixture_list) inputs.emplace_back(f.name, f.language);
        for (std::size_t i = 0; i < corpus.size(); ++i) inputs.emplace_back("random " + std::to_string(i), corpus[i]);
        bool ok = guarded([&] {
            for (const auto& [name, lang] : inputs) {
                SyntacticData sd = syntactic(lang);
                if (sd.morphism.size() > 4) continue;
                TrivialClass st(lang.alphabet());
                AlphabetTestableClass at(lang.alphabet());
                for (const BaseClass* c : {static_cast<const BaseClass*>(&st), static_cast<const BaseClass*>(&at)}) {
                    PairRelation pairs = compute_pairs(sd.morphism, *c);
                    if (!decide_pol(sd, pairs).answer) continue;
                    auto start = Clock::now();
                    SynthesisResult r = synthesize(sd, *c, pairs);
                    const bool good = r.verified && r.level <= r.bound && equivalent(expr_to_dfa(r.expression), lang);
                    slowest = std::max(slowest, seconds_since(start));
                    ++runs;
                    if (!good) {
                        ++unverified;
                        detail += " [" + name + " under " + c->name() + "]";
                    }
                    for (const auto& st_level : r.stats) {
                        ++levels;
                        if (!st_level.sound) ++unsound_levels;
                    }
                    if (!includes(lang, r.language)) ++unsound_levels;
                }
            }
            return true;
        }, detail);
        report(4, "witness synthesis round trips", ok && runs > 0 && unverified == 0 && slowest < 10,
               std::to_string(runs) + " runs, " + std::to_string(unverified) + " unverified, slowest " + str(slowest) +
                   " s" + detail);
        report(5, "every synthesis level is included in L", ok && unsound_levels == 0 && levels > 0,
               std::to_string(unsound_levels) + " violations over " + std::to_string(levels) + " levels");
    }

    // 6 and 7
    {
        int fixtures_checked = 0, mismatches = 0, subsets = 0, duality_failures = 0;
        std::string detail;
        bool ok = guarded([&] {
            AlphabetTestableClass at(ab);
            for (const auto& f : fixture_list) {
                SyntacticData sd = syntactic(f.language);
                const Morphism& m = sd.morphism;
                if (m.size() > 8) continue;
                ++fixtures_checked;
                PairRelation plain = compute_pairs(m, at);
                PairRelation by_closure = compute_saturated(m, at, SaturationMethod::by_closure, &plain);
                PairRelation by_membership = compute_saturated(m, at, SaturationMethod::by_membership);
                if (!(by_closure.bits == by_membership.bits)) ++mismatches;
                const auto n = static_cast<std::size_t>(m.size());
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    ElementSet subset(n);
                    for (std::size_t i = 0; i < n; ++i) subset[i] = (mask >> i) & 1u;
                    ++subsets;
                    if (at.member(preimage_dfa(m, subset)) != is_upper_set(subset, by_membership.bits))
                        ++duality_failures;
                }
            }
            return true;
        }, detail);
        report(6, "saturated pairs by membership equal the closure of the pairs", ok && mismatches == 0,
               std::to_string(mismatches) + " mismatches over " + std::to_string(fixtures_checked) + " fixtures" + detail);
        report(7, "AT preimages are exactly the upper sets of the saturated pairs", ok && duality_failures == 0,
               std::to_string(duality_failures) + " disagreements over " + std::to_string(subsets) + " subsets");
    }

    // 8
    {
        int instances = 0, broken = 0;
        std::string detail;
        bool ok = guarded([&] {
            auto check = [&](const Morphism& m, const BaseClass& c) {
                PairRelation plain = compute_pairs(m, c);
                PairRelation sat = compute_saturated(m, c, SaturationMethod::by_closure, &plain);
                auto a = check_relation_laws(plain, m);
                auto b = check_relation_laws(sat, m, &plain);
                ++instances;
                if (!(a.reflexive && a.multiplicative && b.transitive && b.reflexive && b.multiplicative)) ++broken;
            };
            TrivialClass st(ab);
            AlphabetTestableClass at(ab);
            for (const auto& f : fixture_list) {
                SyntacticData sd = syntactic(f.language);
                check(sd.morphism, st);
                check(sd.morphism, at);
            }
            std::mt19937_64 rng(8);
            for (int i = 0; i < 50; ++i) {
                SyntacticData sd = random_syntactic(rng, 4, 2 + static_cast<std::size_t>(i % 2), 40);
                std::unique_ptr<BaseClass> c;
                if (i % 3 == 0) c = std::make_unique<TrivialClass>(sd.morphism.alphabet());
                else if (i % 3 == 1) c = std::make_unique<AlphabetTestableClass>(sd.morphism.alphabet());
                else c = std::make_unique<LatticeClass>(random_lattice(rng, sd.morphism.alphabet(), 3, 256));
                check(sd.morphism, *c);
            }
            return true;
        }, detail);
        report(8, "pair relations are reflexive and multiplicative, saturated pairs transitive", ok && broken == 0,
               std::to_string(broken) + " broken over " + std::to_string(instances) + " instances" + detail);
    }

    // 9
    {
        int words = 0, invalid = 0, ab_max = 0;
        std::string detail;
        bool ok = guarded([&] {
            std::mt19937_64 rng(9);
            for (const auto& f : fixture_list) {
                const SyntacticData sd = syntactic(f.language);
                const Morphism& m = sd.morphism;
                for (int i = 0; i < 500; ++i) {
                    Word w = random_word(rng, 2, 50);
                    Forest forest = build_forest(m, w);
                    const int h = forest_height(forest);
                    ++words;
                    if (!forest_ok(forest, m, w) || !validate_forest(forest, m, w).valid || h > 3 * m.size() - 1)
                        ++invalid;
                    if (f.name == "(ab)*") ab_max = std::max(ab_max, h);
                }
            }
            return true;
        }, detail);
        report(9, "factorization forests validate within 3|M|-1", ok && invalid == 0 && ab_max <= 17,
               std::to_string(invalid) + " invalid of " + std::to_string(words) + ", (ab)* max height " +
                   std::to_string(ab_max) + detail);
    }

    // 10
    {
        std::size_t samples = 0, violations = 0;
        std::string detail;
        bool ok = guarded([&] {
            std::uint64_t seed = 10;
            for (const char* name : {"A*aA*", "b*", "A*"}) {
                Dfa l = fixture(name);
                FiniteLattice lattice = saturate_lattice(std::span<const Dfa>(&l, 1));
                LatticeClass c(lattice);
                SyntacticData sd = syntactic(l);
                PairRelation pairs = compute_pairs(sd.morphism, c);
                if (!decide_pol(sd, pairs).answer) return false;
                SynthesisResult r = synthesize(sd, c, pairs);
                CharPropertyReport rep = check_char_property(l, CanonicalPreorder(lattice), r.expression, 200, seed++);
                samples += rep.samples;
                violations += rep.violations.size();
                detail += std::string(" [") + name + ": h=" + std::to_string(rep.h) + " p=" + std::to_string(rep.p) +
                          " premise " + std::to_string(rep.premise_held) + "]";
            }
            return true;
        }, detail);
        report(10, "characteristic property holds on sampled tuples", ok && violations == 0 && samples == 600,
               std::to_string(violations) + " violations over " + std::to_string(samples) + " samples" + detail);
    }

    // 11
    {
        int invocations = 0, code4 = 0;
        std::vector<std::vector<std::string>> matrix;
        const char* regexes[] = {"(a|b)*a(a|b)*", "(ab)*", "b*", "(a|b)*", "a*b*", "(a|b)*a(a|b)*b(a|b)*",
                                 "a(a|b)*", "(a|b)*ab", "(aa|b)*"};
        for (const char* r : regexes) {
            for (const char* c : {"st", "at"}) {
                for (const char* level : {"pol", "copol", "upol"})
                    matrix.push_back({"decide", "--class", c, "--level", level, "--regex", r, "--alphabet", "ab"});
                matrix.push_back({"pairs", "--class", c, "--regex", r, "--alphabet", "ab"});
                matrix.push_back({"witness", "--class", c, "--regex", r, "--alphabet", "ab"});
            }
            matrix.push_back({"forest", "--class-independent", "--regex", r, "--alphabet", "ab", "--word", "abbaab"});
        }
        matrix.push_back({"laws", "--suite", "all", "--seed", "1"});
        for (const auto& args : matrix) {
            std::ostringstream out, err;
            ++invocations;
            if (run(args, out, err) == exit_internal) ++code4;
        }
        report(11, "no theorem self-check trips", code4 == 0 && theorem_violations == 0,
               std::to_string(code4) + " exit-4 runs over " + std::to_string(invocations) + " invocations, " +
                   std::to_string(theorem_violations) + " in-process trips");
    }

    // 12
    {
        SyntacticData x = syntactic(fixture("(ab)*"));
        SyntacticData y = syntactic(fixture("A*aA*"));
        const auto f_size = std::count(x.morphism.accepting().begin(), x.morphism.accepting().end(), true);
        const auto idem = idempotents(x.morphism.monoid()).size();
        const bool ok = x.morphism.size() == 6 && x.morphism.monoid().omega() == 2 && f_size == 2 && idem == 4 &&
                        y.morphism.size() == 2 && y.morphism.monoid().omega() == 1 &&
                        oracle::congruence_classes(fixture("(ab)*"), 5, 4) == 6;
        report(12, "golden syntactic monoids", ok,
               "(ab)*: |M|=" + std::to_string(x.morphism.size()) + " w=" + std::to_string(x.morphism.monoid().omega()) +
                   " |F|=" + std::to_string(f_size) + " |E|=" + std::to_string(idem) + "; A*aA*: |M|=" +
                   std::to_string(y.morphism.size()) + " w=" + std::to_string(y.morphism.monoid().omega()));
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
