#include "polc/cli.hpp"

#include "polc/baseclass.hpp"
#include "polc/decide.hpp"
#include "polc/errors.hpp"
#include "polc/forest.hpp"
#include "polc/laws.hpp"
#include "polc/pairs.hpp"
#include "polc/witness.hpp"
#include "utf8.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace polc {

namespace {

struct Options {
    std::string regex;
    std::string dfa;
    std::string alphabet;
    std::string class_spec;
    std::string level = "pol";
    std::string expect;
    std::string word;
    std::string suite = "all";
    std::uint64_t seed = 1;
    std::size_t samples = default_law_samples;
    std::optional<int> max_h;
    std::size_t monoid_cap = default_monoid_cap;
    bool machine = false;
    bool dump = false;
    bool class_independent = false;
    bool has_regex = false;
    bool has_dfa = false;
};

Alphabet alphabet_of_regex(const std::string& regex) {
    std::u32string letters;
    for (const auto& cp : detail::decode_utf8(regex)) {
        const char32_t c = cp.value;
        if (c == U'(' || c == U')' || c == U'|' || c == U'*' || c == U' ' || c == U'\t' || c == U'\n' ||
            c == U'\r')
            continue;
        letters.push_back(c);
    }
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (letters.empty()) {
        parse_regex(regex, Alphabet(U"a")); // reports syntax errors such as the empty pattern
        throw InputError("the regex uses no letters; pass --alphabet");
    }
    return Alphabet(letters);
}

Dfa load_language(const Options& o) {
    if (o.has_regex == o.has_dfa) throw InputError("give exactly one of --regex and --dfa");
    if (o.has_dfa) {
        std::ifstream in(o.dfa, std::ios::binary);
        if (!in) throw InputError("cannot read '" + o.dfa + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        Dfa d = parse_dfa_text(buf.str());
        if (!o.alphabet.empty() && !(Alphabet::from_utf8(o.alphabet) == d.alphabet()))
            throw InputError("--alphabet differs from the alphabet of '" + o.dfa + "'");
        return minimize(d);
    }
    Alphabet alphabet = o.alphabet.empty() ? alphabet_of_regex(o.regex) : Alphabet::from_utf8(o.alphabet);
    return compile_regex(o.regex, alphabet);
}

std::unique_ptr<BaseClass> load_class(const Options& o, const Alphabet& alphabet) {
    if (o.class_spec.empty()) throw InputError("--class is required");
    return make_class(o.class_spec, alphabet);
}

void machine_begin(std::ostream& out) { out << "--- machine ---\n"; }
void machine_end(std::ostream& out) { out << "--- end ---\n"; }

int cmd_monoid(const Options& o, std::ostream& out) {
    SyntacticData sd = syntactic(load_language(o), o.monoid_cap);
    const Morphism& m = sd.morphism;
    out << monoid_report(m);
    if (o.machine) {
        machine_begin(out);
        out << "size " << m.size() << "\nomega " << m.monoid().omega() << '\n';
        for (Element s = 0; s < m.size(); ++s)
            out << "element " << s << ' ' << m.name(s) << (m.accepting()[static_cast<std::size_t>(s)] ? " accepting" : "")
                << (m.monoid().is_idempotent(s) ? " idempotent" : "") << '\n';
        machine_end(out);
    }
    return exit_ok;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_pairs(const Options& o, std::ostream& out) {
    SyntacticData sd = syntactic(load_language(o), o.monoid_cap);
    const Morphism& m = sd.morphism;
    auto oracle = load_class(o, m.alphabet());
    PairRelation plain = compute_pairs(m, *oracle);
    PairRelation sat = compute_saturated(m, *oracle, SaturationMethod::by_closure, &plain);
    if (static_cast<std::size_t>(m.size()) <= default_subset_cap) {
        PairRelation by_membership = compute_saturated(m, *oracle, SaturationMethod::by_membership);
        if (!(by_membership.bits == sat.bits))
            throw TheoremViolation("saturated pairs by membership differ from the closure of the pairs");
    }
    out << "class: " << oracle->name() << '\n' << pairs_report(plain, m) << pairs_report(sat, m);
    auto laws = check_relation_laws(plain, m);
    auto sat_laws = check_relation_laws(sat, m, &plain);
    out << "laws: reflexive " << yes_no(laws.reflexive) << ", multiplicative " << yes_no(laws.multiplicative)
        << ", saturated transitive " << yes_no(sat_laws.transitive) << ", pairs within saturated "
        << yes_no(sat_laws.contains_plain) << '\n';
    if (o.machine) {
        machine_begin(out);
        for (Element s = 0; s < m.size(); ++s)
            for (Element t = 0; t < m.size(); ++t)
                if (plain.test(s, t)) out << m.name(s) << " -> " << m.name(t) << '\n';
        machine_end(out);
    }
    if (!laws.ok() || !sat_laws.ok()) throw TheoremViolation("pair relation laws failed");
    return exit_ok;
}

Verdict decide_level(Level level, const SyntacticData& sd, const BaseClass& oracle) {
    const Morphism& m = sd.morphism;
    PairRelation plain = compute_pairs(m, oracle);
    switch (level) {
    case Level::pol: return decide_pol(sd, plain);
    case Level::copol: return decide_copol(sd, plain);
    case Level::upol: {
        PairRelation sat = compute_saturated(m, oracle, SaturationMethod::by_closure, &plain);
        if (static_cast<std::size_t>(m.size()) <= default_subset_cap) {
            PairRelation by_membership = compute_saturated(m, oracle, SaturationMethod::by_membership);
            if (!(by_membership.bits == sat.bits))
                throw TheoremViolation("saturated pairs by membership differ from the closure of the pairs");
        }
        return decide_upol(sd, plain, &sat);
    }
    }
    throw InputError("unknown level");
}

int cmd_decide(const Options& o, std::ostream& out) {
    const Level level = parse_level(o.level);
    if (!o.expect.empty() && o.expect != "yes" && o.expect != "no")
        throw InputError("--expect takes yes or no");
    SyntacticData sd = syntactic(load_language(o), o.monoid_cap);
    auto oracle = load_class(o, sd.morphism.alphabet());
    Verdict v = decide_level(level, sd, *oracle);
    out << level_name(level) << '(' << oracle->name() << "): " << yes_no(v.answer) << '\n';
    if (v.violation) out << "violation: " << describe(v, sd.morphism) << '\n';
    if (o.machine) {
        machine_begin(out);
        out << "level " << level_name(level) << "\nclass " << oracle->name() << "\nanswer " << yes_no(v.answer)
            << "\nequation " << v.equation << '\n';
        if (v.violation)
            out << "s " << sd.morphism.alphabet().format(v.violation->s_word) << "\nt "
                << sd.morphism.alphabet().format(v.violation->t_word) << '\n';
        machine_end(out);
    }
    if (!o.expect.empty() && o.expect != yes_no(v.answer)) return exit_expect;
    return exit_ok;
}

int cmd_witness(const Options& o, std::ostream& out) {
    SyntacticData sd = syntactic(load_language(o), o.monoid_cap);
    auto oracle = load_class(o, sd.morphism.alphabet());
    PairRelation plain = compute_pairs(sd.morphism, *oracle);
    Verdict v = decide_pol(sd, plain);
    if (!v.answer) {
        out << "pol(" << oracle->name() << "): no\nviolation: " << describe(v, sd.morphism)
            << "\nno witness exists\n";
        return exit_ok;
    }
    SynthesisResult r = synthesize(sd, *oracle, plain, o.max_h);
    const bool verified = r.verified && verify_witness(sd, r);
    out << "pol(" << oracle->name() << "): yes\n";
    out << "expression:\n" << definitions_text(r.expression);
    out << "legend:\n";
    for (const auto& k : r.bases) {
        out << "  " << k.name << ":\n";
        std::istringstream lines(to_text(k.language));
        for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    }
    out << "level: " << r.level << " (bound " << r.bound << ")\n";
    out << "verified: " << yes_no(verified) << '\n';
    if (o.machine) {
        machine_begin(out);
        out << "level " << r.level << "\nverified " << yes_no(verified) << '\n';
        for (const auto& st : r.stats)
            out << "stats " << st.level << ' ' << st.largest_automaton << ' ' << st.union_states << ' '
                << yes_no(st.sound) << ' ' << yes_no(st.equivalent) << '\n';
        out << "expression " << to_text(r.expression) << '\n';
        machine_end(out);
    }
    return exit_ok;
}

int cmd_forest(const Options& o, std::ostream& out) {
    SyntacticData sd = syntactic(load_language(o), o.monoid_cap);
    const Morphism& m = sd.morphism;
    const Word w = m.alphabet().parse_word(o.word);
    Forest f = build_forest(m, w);
    ForestReport r = validate_forest(f, m, w);
    out << "word: " << m.alphabet().format(w) << "\nheight: " << r.height << " (bound " << 3 * m.size() - 1
        << ")\nvalid: " << yes_no(r.valid) << '\n';
    for (const auto& failure : r.failures) out << "  " << failure << '\n';
    if (o.dump) out << dump_forest(f, m);
    if (o.machine) {
        machine_begin(out);
        out << "height " << r.height << "\nvalid " << yes_no(r.valid) << '\n';
        machine_end(out);
    }
    if (!r.valid || r.height > 3 * m.size() - 1) throw TheoremViolation("forest failed validation");
    return exit_ok;
}

int cmd_laws(const Options& o, std::ostream& out) {
    LawSuiteReport r = run_laws(o.suite, o.seed, o.samples);
    for (const auto& note : r.notes) out << note << '\n';
    for (const auto& f : r.failures) out << "FAIL " << f.law << ": " << f.reproduction << '\n';
    out << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures\n";
    if (o.machine) {
        machine_begin(out);
        out << "suite " << r.suite << "\nseed " << o.seed << "\ncases " << r.cases << "\nfailures "
            << r.failures.size() << '\n';
        machine_end(out);
    }
    return r.failures.empty() ? exit_ok : exit_internal;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Decide polynomial closure membership for regular languages", "polc"};
    app.require_subcommand(1);

    auto language = [&](CLI::App* sub) {
        sub->add_option("--regex", o.regex, "Regular expression (letters, |, *, parentheses)");
        sub->add_option("--dfa", o.dfa, "DFA file");
        sub->add_option("--alphabet", o.alphabet, "Alphabet letters (default: letters of the regex)");
        sub->add_option("--monoid-cap", o.monoid_cap, "Largest syntactic monoid to compute");
        sub->add_flag("--machine", o.machine, "Append a machine-readable block");
    };
    auto with_class = [&](CLI::App* sub) { sub->add_option("--class", o.class_spec, "st, at or lattice:<path>"); };

    auto* monoid = app.add_subcommand("monoid", "Syntactic ordered monoid");
    language(monoid);
    auto* pairs = app.add_subcommand("pairs", "Pair and saturated pair relations");
    language(pairs);
    with_class(pairs);
    auto* decide = app.add_subcommand("decide", "Membership in pol, copol or upol");
    language(decide);
    with_class(decide);
    decide->add_option("--level", o.level, "pol, copol or upol");
    decide->add_option("--expect", o.expect, "Exit with 3 unless the answer is this (yes or no)");
    auto* witness = app.add_subcommand("witness", "Synthesize a polynomial expression");
    language(witness);
    with_class(witness);
    witness->add_option("--max-h", o.max_h, "Highest level to build");
    auto* forest = app.add_subcommand("forest", "Factorization forest of a word");
    language(forest);
    forest->add_flag("--class-independent", o.class_independent, "Accepted for symmetry; forests need no class");
    forest->add_option("--word", o.word, "Word to factorize (ε for the empty word)")->required();
    forest->add_flag("--dump", o.dump, "Print the tree");
    auto* laws = app.add_subcommand("laws", "Run seeded property suites");
    laws->add_option("--suite", o.suite, "preorder, period, charprop, pairs, saturated, equations, forest, witness or all");
    laws->add_option("--seed", o.seed, "Random seed");
    laws->add_option("--samples", o.samples, "Samples per property");
    laws->add_flag("--machine", o.machine, "Append a machine-readable block");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        for (auto* sub : app.get_subcommands()) {
            if (auto* opt = sub->get_option_no_throw("--regex")) o.has_regex = opt->count() > 0;
            if (auto* opt = sub->get_option_no_throw("--dfa")) o.has_dfa = opt->count() > 0;
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }

    try {
        if (monoid->parsed()) return cmd_monoid(o, out);
        if (pairs->parsed()) return cmd_pairs(o, out);
        if (decide->parsed()) return cmd_decide(o, out);
        if (witness->parsed()) return cmd_witness(o, out);
        if (forest->parsed()) return cmd_forest(o, out);
        return cmd_laws(o, out);
    } catch (const TheoremViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace polc
