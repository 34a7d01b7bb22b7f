#include "polc/laws.hpp"

#include "polc/baseclass.hpp"
#include "polc/decide.hpp"
#include "polc/errors.hpp"
#include "polc/fixtures.hpp"
#include "polc/forest.hpp"
#include "polc/pairs.hpp"
#include "polc/witness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

namespace polc {

namespace {

class Runner {
public:
    explicit Runner(LawSuiteReport& report) : report_(report) {}

    bool check(const std::string& law, bool ok, const std::function<std::string()>& repro) {
        ++report_.cases;
        ++counts_[law];
        if (!ok) report_.failures.push_back({law, repro()});
        return ok;
    }
    void note(std::string text) { report_.notes.push_back(std::move(text)); }
    void flush_counts() {
        for (const auto& [law, n] : counts_) note(law + ": " + std::to_string(n) + " cases");
        counts_.clear();
    }

private:
    LawSuiteReport& report_;
    std::map<std::string, std::size_t> counts_;
};

Word power(const Word& w, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

Word cat(Word u, const Word& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
}

std::string words(const Alphabet& al, std::initializer_list<const Word*> ws) {
    std::string out;
    for (const Word* w : ws) out += (out.empty() ? "" : ", ") + al.format(*w);
    return out;
}

std::string seed_text(std::uint64_t seed) { return "seed " + std::to_string(seed) + ": "; }

const Alphabet& ab() {
    static const Alphabet alphabet(U"ab");
    return alphabet;
}

struct NamedLattice {
    std::string name;
    FiniteLattice lattice;
};

std::vector<NamedLattice> builtin_lattices() {
    std::vector<NamedLattice> out;
    for (const char* name : {"A*", "b*", "A*aA*"}) {
        Dfa g = fixture(name);
        out.push_back({std::string("lattice of ") + name, saturate_lattice(std::span<const Dfa>(&g, 1))});
    }
    return out;
}

std::unique_ptr<BaseClass> class_for(int which, const Alphabet& alphabet, std::mt19937_64& rng) {
    if (which == 0) return std::make_unique<TrivialClass>(alphabet);
    if (which == 1) return std::make_unique<AlphabetTestableClass>(alphabet);
    return std::make_unique<LatticeClass>(random_lattice(rng, alphabet, 3, 64));
}

// ---------------------------------------------------------------- preorder

void preorder_suite(Runner& run, std::uint64_t seed, std::size_t samples) {
    std::mt19937_64 rng(seed);
    for (const auto& [name, lattice] : builtin_lattices()) {
        run.check("lattice is closed", lattice.is_closed(), [&] { return name; });
        CanonicalPreorder pre(lattice);
        const Morphism& pm = pre.profile_morphism();
        for (std::size_t i = 0; i < samples; ++i) {
            Word u = random_word(rng, 2, 6), v = random_word(rng, 2, 6), w = random_word(rng, 2, 6);
            Word u2 = random_word(rng, 2, 6), v2 = random_word(rng, 2, 6);
            auto repro = [&] { return seed_text(seed) + name + ": " + words(ab(), {&u, &v, &w, &u2, &v2}); };
            run.check("reflexive", pre.leq(u, u), repro);
            if (pre.leq(u, v) && pre.leq(v, w)) run.check("transitive", pre.leq(u, w), repro);
            for (const Dfa& l : lattice.elements())
                if (pre.leq(u, v) && accepts(l, u)) run.check("elements are upper sets", accepts(l, v), repro);
            if (pre.leq(u, u2) && pre.leq(v, v2))
                run.check("compatible with concatenation", pre.leq(cat(u, v), cat(u2, v2)), repro);
            run.check("profile monoid lifts the preorder",
                      pre.leq(u, v) == pre.leq(evaluate(pm, u), evaluate(pm, v)), repro);
        }
        // A language recognized as a lattice member is upward closed on sampled pairs.
        for (std::size_t i = 0; i < std::max<std::size_t>(1, samples / 10); ++i) {
            Dfa l = random_dfa(rng, 3, 2);
            Dfa cand(ab(), l.size(), l.initial(), l.finals(), l.transitions());
            if (rng() % 2) {
                const auto& el = lattice.elements();
                cand = union_of(el[rng() % el.size()], el[rng() % el.size()]);
            }
            if (!lattice.find(cand)) continue;
            for (std::size_t j = 0; j < 20; ++j) {
                Word u = random_word(rng, 2, 6), v = random_word(rng, 2, 6);
                if (pre.leq(u, v) && accepts(cand, u))
                    run.check("members are upper sets", accepts(cand, v),
                              [&] { return seed_text(seed) + name + ": " + words(ab(), {&u, &v}); });
            }
        }
    }
    Dfa g = fixture("b*");
    CanonicalPreorder pre(saturate_lattice(std::span<const Dfa>(&g, 1)));
    const Word a = ab().parse_word("a"), b = ab().parse_word("b");
    run.check("a <= b under {0, b*, A*}", pre.leq(a, b), [] { return std::string("expected true"); });
    run.check("b not <= a under {0, b*, A*}", !pre.leq(b, a), [] { return std::string("expected false"); });
}

// ---------------------------------------------------------------- period

void period_suite(Runner& run, std::uint64_t seed, std::size_t samples) {
    std::mt19937_64 rng(seed);
    auto lattices = builtin_lattices();
    {
        Dfa g = fixture("(ab)*");
        lattices.push_back({"lattice of (ab)*", saturate_lattice(std::span<const Dfa>(&g, 1))});
    }
    const std::map<std::string, int> expected{
        {"lattice of A*", 1}, {"lattice of b*", 1}, {"lattice of A*aA*", 1}, {"lattice of (ab)*", 2}};
    for (const auto& [name, lattice] : lattices) {
        CanonicalPreorder pre(lattice);
        const int p = pre.period();
        run.check("period value", p == expected.at(name),
                  [&] { return name + ": expected " + std::to_string(expected.at(name)) + ", got " + std::to_string(p); });
        for (std::size_t i = 0; i < samples; ++i) {
            Word w = random_word(rng, 2, 4);
            for (std::size_t m1 = 1; m1 <= 3; ++m1)
                for (std::size_t m2 = 1; m2 <= 3; ++m2) {
                    Word x = power(w, static_cast<std::size_t>(p) * m1), y = power(w, static_cast<std::size_t>(p) * m2);
                    run.check("w^(pm) <= w^(pm')", pre.leq(x, y), [&] {
                        return seed_text(seed) + name + ": w = " + ab().format(w) + ", m = " + std::to_string(m1) +
                               ", m' = " + std::to_string(m2);
                    });
                }
        }
    }
}

// ---------------------------------------------------------------- charprop

void charprop_suite(Runner& run, std::uint64_t seed, std::size_t samples) {
    std::uint64_t k = 0;
    for (const char* name : {"A*aA*", "b*", "A*"}) {
        Dfa l = fixture(name);
        FiniteLattice lattice = saturate_lattice(std::span<const Dfa>(&l, 1));
        LatticeClass oracle(lattice);
        SyntacticData sd = syntactic(l);
        PairRelation pairs = compute_pairs(sd.morphism, oracle);
        if (!run.check("language in Pol of its lattice", decide_pol(sd, pairs).answer, [&] { return std::string(name); }))
            continue;
        SynthesisResult witness = synthesize(sd, oracle, pairs);
        CanonicalPreorder pre(lattice);
        CharPropertyReport r = check_char_property(l, pre, witness.expression, samples, seed + k++);
        run.note(std::string(name) + ": h = " + std::to_string(r.h) + ", p = " + std::to_string(r.p) + ", premise held " +
                 std::to_string(r.premise_held) + "/" + std::to_string(r.samples));
        for (std::size_t i = 0; i < r.samples; ++i) {
            const CharPropertySample* bad = i < r.violations.size() ? &r.violations[i] : nullptr;
            run.check("characteristic property", bad == nullptr, [&] {
                return seed_text(seed) + name + ": x = " + ab().format(bad->x) + ", u = " + ab().format(bad->u) +
                       ", v = " + ab().format(bad->v) + ", y = " + ab().format(bad->y) + ", l = " + std::to_string(bad->ell);
            });
        }
    }
}

// ---------------------------------------------------------------- pairs

Relation checked_pairs_by_separation(Runner& run, const BaseClass& oracle, const Morphism& m, const std::string& ctx) {
    const int n = m.size();
    std::vector<Dfa> pre;
    for (Element s = 0; s < n; ++s) pre.push_back(preimage_dfa(m, s));
    Relation r(static_cast<std::size_t>(n));
    for (Element s = 0; s < n; ++s)
        for (Element t = 0; t < n; ++t) {
            const Dfa& l1 = pre[static_cast<std::size_t>(s)];
            const Dfa& l2 = pre[static_cast<std::size_t>(t)];
            auto k = oracle.separate(l1, l2);
            if (!k) {
                r.set(s, t);
                // The minimal superset meets L2 on a concrete word.
                if (auto* lat = dynamic_cast<const LatticeClass*>(&oracle))
                    run.check("no separator means the least superset meets L2",
                              !is_empty(intersection_of(lat->least_superset(l1), l2)), [&] { return ctx; });
                if (auto* at = dynamic_cast<const AlphabetTestableClass*>(&oracle))
                    run.check("no separator means the least superset meets L2",
                              !is_empty(intersection_of(at->least_superset(l1), l2)), [&] { return ctx; });
                continue;
            }
            auto where = [&] { return ctx + ": separator of " + m.name(s) + " from " + m.name(t); };
            run.check("separator includes L1", includes(*k, l1), where);
            run.check("separator avoids L2", is_empty(intersection_of(*k, l2)), where);
            run.check("separator is in the class", oracle.member(*k), where);
        }
    return r;
}

void pair_laws(Runner& run, const BaseClass& oracle, const Morphism& m, const std::string& ctx) {
    PairRelation plain = compute_pairs(m, oracle);
    Relation slow = checked_pairs_by_separation(run, oracle, m, ctx);
    run.check("closed form equals per-cell separation", slow == plain.bits, [&] { return ctx; });
    auto laws = check_relation_laws(plain, m);
    run.check("pairs are reflexive", laws.reflexive, [&] { return ctx; });
    run.check("pairs are multiplicative", laws.multiplicative,
              [&] { return ctx + ": " + (laws.failures.empty() ? "" : laws.failures.back()); });
    PairRelation sat = compute_saturated(m, oracle, SaturationMethod::by_closure, &plain);
    auto sat_laws = check_relation_laws(sat, m, &plain);
    run.check("saturated pairs are transitive", sat_laws.transitive, [&] { return ctx; });
    run.check("saturated pairs contain the pairs", sat_laws.contains_plain, [&] { return ctx; });
}

void pairs_suite(Runner& run, std::uint64_t seed, std::size_t samples) {
    TrivialClass st(ab());
    AlphabetTestableClass at(ab());
    for (const auto& f : fixtures()) {
        SyntacticData sd = syntactic(f.language);
        pair_laws(run, st, sd.morphism, f.name + " under ST");
        pair_laws(run, at, sd.morphism, f.name + " under AT");
        run.check("ST pairs are everything", compute_pairs(sd.morphism, st).bits == Relation::full(sd.morphism.size()),
                  [&] { return f.name; });
    }
    {
        SyntacticData sd = syntactic(fixture("A*aA*"));
        run.check("AT pairs of A*aA* are diagonal",
                  compute_pairs(sd.morphism, at).bits == Relation::identity(2), [] { return std::string("A*aA*"); });
    }
    {
        SyntacticData sd = syntactic(fixture("(ab)*"));
        const Morphism& m = sd.morphism;
        PairRelation r = compute_pairs(m, at);
        Element ab_ = evaluate(m, ab().parse_word("ab")), ba = evaluate(m, ab().parse_word("ba")),
                a = evaluate(m, ab().parse_word("aba"));
        run.check("AT pairs of (ab)* contain (ab, ba) and (ab, a)", r.test(ab_, ba) && r.test(ab_, a),
                  [] { return std::string("(ab)*"); });
    }
    std::mt19937_64 rng(seed);
    const std::size_t instances = std::min<std::size_t>(samples, 50);
    for (std::size_t i = 0; i < instances; ++i) {
        const std::size_t letters = 2 + rng() % 2;
        SyntacticData sd = random_syntactic(rng, 4, letters, 40);
        auto oracle = class_for(static_cast<int>(i % 3), sd.morphism.alphabet(), rng);
        pair_laws(run, *oracle, sd.morphism,
                  seed_text(seed) + "random instance " + std::to_string(i) + " under " + oracle->name());
    }
}

// ---------------------------------------------------------------- saturated

void saturated_checks(Runner& run, const BaseClass& oracle, const Morphism& m, const std::string& ctx,
                      bool duality) {
    PairRelation plain = compute_pairs(m, oracle);
    PairRelation by_closure = compute_saturated(m, oracle, SaturationMethod::by_closure, &plain);
    PairRelation by_membership = compute_saturated(m, oracle, SaturationMethod::by_membership);
    run.check("membership and closure methods agree", by_closure.bits == by_membership.bits, [&] { return ctx; });
    auto laws = check_relation_laws(by_membership, m, &plain);
    run.check("saturated laws", laws.ok(), [&] { return ctx + ": " + (laws.ok() ? "" : laws.failures.front()); });
    if (!duality) return;
    const auto n = static_cast<std::size_t>(m.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ElementSet f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = (mask >> i) & 1u;
        const bool in_class = oracle.member(preimage_dfa(m, f));
        run.check("recognized members are exactly the upper sets", in_class == is_upper_set(f, by_membership.bits),
                  [&] { return ctx + ": subset mask " + std::to_string(mask); });
    }
}

void saturated_suite(Runner& run, std::uint64_t seed, std::size_t samples) {
    TrivialClass st(ab());
    AlphabetTestableClass at(ab());
    for (const auto& f : fixtures()) {
        SyntacticData sd = syntactic(f.language);
        if (sd.morphism.size() > 8) continue;
        saturated_checks(run, at, sd.morphism, f.name + " under AT", true);
        saturated_checks(run, st, sd.morphism, f.name + " under ST", false);
        run.check("ST saturated pairs are everything",
                  compute_saturated(sd.morphism, st, SaturationMethod::by_membership).bits ==
                      Relation::full(sd.morphism.size()),
                  [&] { return f.name; });
    }
    std::mt19937_64 rng(seed);
    const std::size_t instances = std::min<std::size_t>(samples, 30);
    for (std::size_t i = 0; i < instances; ++i) {
        SyntacticData sd = random_syntactic(rng, 3, 2, 8);
        auto oracle = class_for(static_cast<int>(i % 3), sd.morphism.alphabet(), rng);
        saturated_checks(run, *oracle, sd.morphism, seed_text(seed) + "random instance " + std::to_string(i) +
                                                        " under " + oracle->name(),
                         oracle->name() == "AT");
    }
}

// ---------------------------------------------------------------- equations

void equations_suite(Runner& run, std::uint64_t seed, std::size_t samples) {
    std::mt19937_64 rng(seed);
    const std::size_t monoids = std::max<std::size_t>(samples / 2, 100);
    for (std::size_t i = 0; i < monoids; ++i) {
        SyntacticData sd = random_syntactic(rng, 3, 2, 6);
        const FiniteMonoid& mon = sd.morphism.monoid();
        const int n = mon.size();
        Relation order = sd.morphism.order();
        if (i % 3 == 1) order = Relation::identity(static_cast<std::size_t>(n));
        if (i % 3 == 2) {
            ElementSet f(static_cast<std::size_t>(n));
            for (std::size_t s = 0; s < f.size(); ++s) f[s] = rng() % 2;
            order = order_by_contexts(mon, f);
        }
        Relation seeds(static_cast<std::size_t>(n));
        for (int j = 0, extra = static_cast<int>(rng() % 3); j < extra; ++j)
            seeds.set(static_cast<Element>(rng() % static_cast<std::uint64_t>(n)),
                      static_cast<Element>(rng() % static_cast<std::uint64_t>(n)));
        Relation pairs = multiplicative_closure(mon, seeds);
        for (bool reversed : {false, true}) {
            bool general = !first_violation(mon, order, pairs, EquationForm::general, reversed);
            bool idem = !first_violation(mon, order, pairs, EquationForm::idempotent, reversed);
            auto repro = [&] { return seed_text(seed) + "random ordered monoid " + std::to_string(i); };
            if (idem) run.check("idempotent form implies general form", general, repro);
            if (general) run.check("general form implies idempotent form", idem, repro);
        }
    }

    TrivialClass st(ab());
    AlphabetTestableClass at(ab());
    std::vector<Fixture> cases = fixtures();
    for (std::size_t i = 0; i < std::min<std::size_t>(samples, 100); ++i) {
        Dfa d = random_dfa(rng, 4, 2);
        cases.push_back({seed_text(seed) + "random DFA " + std::to_string(i), d});
    }
    for (const auto& f : cases) {
        SyntacticData sd = syntactic(f.language);
        SyntacticData co = syntactic(complement(f.language));
        for (const BaseClass* oracle : {static_cast<const BaseClass*>(&st), static_cast<const BaseClass*>(&at)}) {
            const std::string ctx = f.name + " under " + oracle->name();
            try {
                PairRelation plain = compute_pairs(sd.morphism, *oracle);
                PairRelation sat = compute_saturated(sd.morphism, *oracle, SaturationMethod::by_closure, &plain);
                bool pol = decide_pol(sd, plain).answer;
                bool copol = decide_copol(sd, plain).answer;
                bool upol = decide_upol(sd, plain, &sat).answer;
                bool pol_of_complement = decide_pol(co, compute_pairs(co.morphism, *oracle)).answer;
                run.check("co-Pol is Pol of the complement", copol == pol_of_complement, [&] { return ctx; });
                run.check("UPol is Pol and co-Pol", upol == (pol && copol), [&] { return ctx; });
            } catch (const TheoremViolation& e) {
                run.check("equation forms agree", false, [&] { return ctx + ": " + e.what(); });
            }
        }
        PairRelation st_pairs = compute_pairs(sd.morphism, st), at_pairs = compute_pairs(sd.morphism, at);
        run.check("ST pairs contain AT pairs", st_pairs.bits.contains(at_pairs.bits), [&] { return f.name; });
        if (decide_pol(sd, st_pairs).answer)
            run.check("Pol(ST) implies Pol(AT)", decide_pol(sd, at_pairs).answer, [&] { return f.name; });
    }
}

// ---------------------------------------------------------------- forest

void forest_suite(Runner& run, std::uint64_t seed, std::size_t samples) {
    std::mt19937_64 rng(seed);
    for (const auto& f : fixtures()) {
        SyntacticData sd = syntactic(f.language);
        const Morphism& m = sd.morphism;
        const int bound = 3 * m.size() - 1;
        int max_height = 0;
        for (std::size_t i = 0; i < samples; ++i) {
            Word w = random_word(rng, 2, 50);
            Forest forest = build_forest(m, w);
            ForestReport r = validate_forest(forest, m, w);
            max_height = std::max(max_height, r.height);
            auto repro = [&] { return seed_text(seed) + f.name + ": w = " + ab().format(w); };
            run.check("forest validates", r.valid, repro);
            run.check("height within 3|M|-1", r.height <= bound, repro);
            run.check("root folds to the image", forest.nodes[forest.root].value == evaluate(m, w), repro);
        }
        run.note(f.name + ": |M| = " + std::to_string(m.size()) + ", max height " + std::to_string(max_height) +
                 " (bound " + std::to_string(bound) + ")");
    }
}

// ---------------------------------------------------------------- witness

void witness_case(Runner& run, const SyntacticData& sd, const BaseClass& oracle, const std::string& ctx) {
    const Morphism& m = sd.morphism;
    PairRelation pairs = compute_pairs(m, oracle);
    for (Element e : idempotents(m.monoid())) {
        NamedDfa k = compute_Ke(e, m, oracle, pairs);
        run.check("K_e contains the preimage of e", includes(k.language, preimage_dfa(m, e)), [&] { return ctx; });
        bool paired = true;
        for (const Word& u : words_up_to(m.alphabet().size(), 8))
            if (accepts(k.language, u) && !pairs.test(e, evaluate(m, u))) paired = false;
        run.check("K_e words pair with e", paired, [&] { return ctx + ": " + k.name; });
    }
    if (!decide_pol(sd, pairs).answer) return;
    try {
        SynthesisResult r = synthesize(sd, oracle, pairs);
        bool sound = std::all_of(r.stats.begin(), r.stats.end(), [](const LevelStats& s) { return s.sound; });
        run.check("every level is sound", sound, [&] { return ctx; });
        run.check("synthesis verified", r.verified && r.level <= r.bound, [&] { return ctx; });
        run.check("witness round trip", verify_witness(sd, r), [&] { return ctx; });
    } catch (const std::exception& e) {
        run.check("synthesis verified", false, [&] { return ctx + ": " + e.what(); });
    }
}

void witness_suite(Runner& run, std::uint64_t seed, std::size_t samples) {
    TrivialClass st(ab());
    AlphabetTestableClass at(ab());
    for (const auto& f : fixtures()) {
        SyntacticData sd = syntactic(f.language);
        if (sd.morphism.size() > 4) continue;
        witness_case(run, sd, st, f.name + " under ST");
        witness_case(run, sd, at, f.name + " under AT");
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < std::min<std::size_t>(samples / 4 + 1, 50); ++i) {
        SyntacticData sd = random_syntactic(rng, 4, 2, 4);
        TrivialClass rst(sd.morphism.alphabet());
        AlphabetTestableClass rat(sd.morphism.alphabet());
        const std::string ctx = seed_text(seed) + "random DFA " + std::to_string(i);
        witness_case(run, sd, rst, ctx + " under ST");
        witness_case(run, sd, rat, ctx + " under AT");
    }
}

using Suite = void (*)(Runner&, std::uint64_t, std::size_t);

const std::map<std::string, Suite>& suite_table() {
    static const std::map<std::string, Suite> table{
        {"preorder", preorder_suite}, {"period", period_suite},       {"charprop", charprop_suite},
        {"pairs", pairs_suite},       {"saturated", saturated_suite}, {"equations", equations_suite},
        {"forest", forest_suite},     {"witness", witness_suite},
    };
    return table;
}

} // namespace

const std::vector<std::string>& law_suites() {
    static const std::vector<std::string> names{"preorder", "period",  "charprop", "pairs",
                                                "saturated", "equations", "forest", "witness"};
    return names;
}

LawSuiteReport run_laws(const std::string& suite, std::uint64_t seed, std::size_t samples) {
    LawSuiteReport report;
    report.suite = suite;
    Runner run(report);
    if (suite == "all") {
        for (const auto& name : law_suites()) {
            run.note("[" + name + "]");
            suite_table().at(name)(run, seed, samples);
            run.flush_counts();
        }
        return report;
    }
    auto it = suite_table().find(suite);
    if (it == suite_table().end())
        throw InputError("unknown suite '" + suite + "' (expected one of preorder, period, charprop, pairs, "
                         "saturated, equations, forest, witness, all)");
    it->second(run, seed, samples);
    run.flush_counts();
    return report;
}

} // namespace polc
