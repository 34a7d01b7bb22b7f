#include "polc/baseclass.hpp"

#include "polc/errors.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace polc {

// ---------------------------------------------------------------- BaseClass

void BaseClass::require_alphabet(const Dfa& lang) const {
    if (!(lang.alphabet() == alphabet()))
        throw InputError("alphabet mismatch: class " + name() + " is over '" + alphabet().to_utf8() +
                         "', language over '" + lang.alphabet().to_utf8() + "'");
}

Relation inseparable_preimages_by_separation(const BaseClass& oracle, const Morphism& m) {
    const int n = m.size();
    std::vector<Dfa> preimages;
    preimages.reserve(static_cast<std::size_t>(n));
    for (Element s = 0; s < n; ++s) preimages.push_back(preimage_dfa(m, s));
    Relation pairs(static_cast<std::size_t>(n));
    for (Element s = 0; s < n; ++s)
        for (Element t = 0; t < n; ++t)
            if (!oracle.separate(preimages[static_cast<std::size_t>(s)], preimages[static_cast<std::size_t>(t)]))
                pairs.set(s, t);
    return pairs;
}

Relation BaseClass::inseparable_preimages(const Morphism& m) const {
    return inseparable_preimages_by_separation(*this, m);
}

namespace {

// Elements with a non-empty preimage.
std::vector<bool> reachable_elements(const Morphism& m) {
    std::vector<bool> seen(static_cast<std::size_t>(m.size()), false);
    std::vector<Element> stack{m.monoid().neutral()};
    seen[static_cast<std::size_t>(m.monoid().neutral())] = true;
    while (!stack.empty()) {
        Element s = stack.back();
        stack.pop_back();
        for (Letter a = 0; a < static_cast<Letter>(m.alphabet().size()); ++a) {
            Element t = m.monoid().multiply(s, m.image(a));
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

} // namespace

// ---------------------------------------------------------------- ST

bool TrivialClass::member(const Dfa& lang) const {
    require_alphabet(lang);
    return is_empty(lang) || is_empty(complement(lang));
}

std::optional<Dfa> TrivialClass::separate(const Dfa& l1, const Dfa& l2) const {
    require_alphabet(l1);
    require_alphabet(l2);
    if (is_empty(l2)) return Dfa::universal(alphabet_);
    if (is_empty(l1)) return Dfa::empty(alphabet_);
    return std::nullopt;
}

Relation TrivialClass::inseparable_preimages(const Morphism& m) const {
    // Only ∅ and A* are available, so two preimages are inseparable iff both are non-empty.
    auto live = reachable_elements(m);
    Relation pairs(static_cast<std::size_t>(m.size()));
    for (Element s = 0; s < m.size(); ++s)
        for (Element t = 0; t < m.size(); ++t)
            if (live[static_cast<std::size_t>(s)] && live[static_cast<std::size_t>(t)]) pairs.set(s, t);
    return pairs;
}

// ---------------------------------------------------------------- AT

std::vector<LetterSet> alphabet_profiles(const Dfa& lang) {
    const auto k = lang.alphabet().size();
    if (k > max_profile_letters)
        throw ResourceError("alphabet profiles support at most " + std::to_string(max_profile_letters) +
                            " letters");
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<int, LetterSet>> stack{{lang.initial(), 0}};
    seen.insert(static_cast<std::uint64_t>(lang.initial()) << 32);
    std::vector<LetterSet> out;
    while (!stack.empty()) {
        auto [q, mask] = stack.back();
        stack.pop_back();
        if (lang.is_final(q)) out.push_back(mask);
        for (Letter a = 0; a < static_cast<Letter>(k); ++a) {
            int r = lang.next(q, a);
            LetterSet m2 = mask | (LetterSet{1} << a);
            if (seen.insert((static_cast<std::uint64_t>(r) << 32) | m2).second) stack.emplace_back(r, m2);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Dfa alphabet_class_union(const Alphabet& alphabet, const std::vector<LetterSet>& profiles) {
    const auto k = alphabet.size();
    if (k > max_profile_letters)
        throw ResourceError("alphabet classes support at most " + std::to_string(max_profile_letters) +
                            " letters");
    const std::size_t n = std::size_t{1} << k;
    std::vector<bool> finals(n, false);
    for (LetterSet p : profiles) finals.at(p) = true;
    std::vector<int> delta(n * k);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t a = 0; a < k; ++a) delta[s * k + a] = static_cast<int>(s | (std::size_t{1} << a));
    return minimize(Dfa(alphabet, static_cast<int>(n), 0, std::move(finals), std::move(delta)));
}

AlphabetTestableClass::AlphabetTestableClass(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
    if (alphabet_.size() > max_profile_letters)
        throw ResourceError("AT supports at most " + std::to_string(max_profile_letters) + " letters");
}

Dfa AlphabetTestableClass::least_superset(const Dfa& lang) const {
    require_alphabet(lang);
    return alphabet_class_union(alphabet_, alphabet_profiles(lang));
}

bool AlphabetTestableClass::member(const Dfa& lang) const {
    return equivalent(lang, least_superset(lang));
}

std::optional<Dfa> AlphabetTestableClass::separate(const Dfa& l1, const Dfa& l2) const {
    require_alphabet(l2);
    Dfa k = least_superset(l1);
    if (is_empty(intersection_of(k, l2))) return k;
    return std::nullopt;
}

Relation AlphabetTestableClass::inseparable_preimages(const Morphism& m) const {
    // Profiles of every preimage α⁻¹(s) from one search over (element, letter set).
    const auto n = static_cast<std::size_t>(m.size());
    const auto k = m.alphabet().size();
    const std::size_t masks = std::size_t{1} << k;
    std::vector<bool> seen(n * masks, false);
    std::vector<std::pair<Element, LetterSet>> stack{{m.monoid().neutral(), 0}};
    seen[static_cast<std::size_t>(m.monoid().neutral()) * masks] = true;
    while (!stack.empty()) {
        auto [s, mask] = stack.back();
        stack.pop_back();
        for (Letter a = 0; a < static_cast<Letter>(k); ++a) {
            Element t = m.monoid().multiply(s, m.image(a));
            LetterSet m2 = mask | (LetterSet{1} << a);
            auto idx = static_cast<std::size_t>(t) * masks + m2;
            if (!seen[idx]) {
                seen[idx] = true;
                stack.emplace_back(t, m2);
            }
        }
    }
    Relation pairs(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t mask = 0; mask < masks; ++mask)
                if (seen[s * masks + mask] && seen[t * masks + mask]) {
                    pairs.set(static_cast<Element>(s), static_cast<Element>(t));
                    break;
                }
    return pairs;
}

// ---------------------------------------------------------------- finite lattices

std::optional<std::size_t> FiniteLattice::find(const Dfa& lang) const {
    if (!(lang.alphabet() == alphabet_)) throw InputError("alphabet mismatch with lattice");
    const std::string key = to_text(minimize(lang));
    auto it = std::find(keys_.begin(), keys_.end(), key);
    if (it == keys_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - keys_.begin());
}

bool FiniteLattice::insert(Dfa lang, std::size_t cap) {
    Dfa canonical = minimize(lang);
    std::string key = to_text(canonical);
    if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) return false;
    if (elements_.size() >= cap)
        throw ResourceError("lattice closure exceeds the configured cap of " + std::to_string(cap) +
                            " elements");
    elements_.push_back(std::move(canonical));
    keys_.push_back(std::move(key));
    return true;
}

bool FiniteLattice::is_closed() const {
    auto has = [&](const Dfa& d) { return find(d).has_value(); };
    if (!has(Dfa::empty(alphabet_)) || !has(Dfa::universal(alphabet_))) return false;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        for (Letter a = 0; a < static_cast<Letter>(alphabet_.size()); ++a)
            if (!has(quotient(Side::left, elements_[i], {a})) || !has(quotient(Side::right, elements_[i], {a})))
                return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!has(union_of(elements_[i], elements_[j])) || !has(intersection_of(elements_[i], elements_[j])))
                return false;
    }
    return true;
}

FiniteLattice saturate_lattice(std::span<const Dfa> generators, std::size_t cap) {
    if (generators.empty()) throw InputError("a lattice needs at least one generator");
    FiniteLattice lattice(generators.front().alphabet());
    for (const Dfa& g : generators) {
        if (!(g.alphabet() == lattice.alphabet())) throw InputError("lattice generators use different alphabets");
        lattice.insert(g, cap);
    }
    lattice.insert(Dfa::empty(lattice.alphabet()), cap);
    lattice.insert(Dfa::universal(lattice.alphabet()), cap);

    const auto k = static_cast<Letter>(lattice.alphabet().size());
    for (std::size_t i = 0; i < lattice.elements_.size(); ++i)
        for (Letter a = 0; a < k; ++a) {
            Dfa current = lattice.elements_[i];
            lattice.insert(quotient(Side::left, current, {a}), cap);
            lattice.insert(quotient(Side::right, current, {a}), cap);
        }
    // Quotients commute with ∩ and ∪, so the boolean steps keep quotient closure;
    // the union closure of an ∩-closed family stays ∩-closed by distributivity.
    for (std::size_t i = 0; i < lattice.elements_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Dfa x = lattice.elements_[i], y = lattice.elements_[j];
            lattice.insert(intersection_of(x, y), cap);
        }
    for (std::size_t i = 0; i < lattice.elements_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Dfa x = lattice.elements_[i], y = lattice.elements_[j];
            lattice.insert(union_of(x, y), cap);
        }
    return lattice;
}

Dfa LatticeClass::least_superset(const Dfa& lang) const {
    require_alphabet(lang);
    Dfa k = Dfa::universal(lattice_.alphabet());
    for (const Dfa& e : lattice_.elements())
        if (includes(e, lang)) k = intersection_of(k, e);
    return k;
}

bool LatticeClass::member(const Dfa& lang) const {
    require_alphabet(lang);
    return lattice_.find(lang).has_value();
}

std::optional<Dfa> LatticeClass::separate(const Dfa& l1, const Dfa& l2) const {
    require_alphabet(l2);
    Dfa k = least_superset(l1);
    if (is_empty(intersection_of(k, l2))) return k;
    return std::nullopt;
}

// ---------------------------------------------------------------- canonical preorder

CanonicalPreorder::CanonicalPreorder(FiniteLattice lattice, std::size_t monoid_cap)
    : lattice_(std::move(lattice)),
      profile_morphism_(transition_morphism(lattice_.elements(), monoid_cap)) {
    for (Element s = 0; s < profile_morphism_.size(); ++s)
        element_profiles_.push_back(profile(profile_morphism_.representative(s)));
}

std::vector<bool> CanonicalPreorder::profile(const Word& w) const {
    std::vector<bool> out;
    out.reserve(lattice_.size());
    for (const Dfa& e : lattice_.elements()) out.push_back(accepts(e, w));
    return out;
}

namespace {

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

Word power_of(const Word& u, std::size_t k) {
    Word out;
    out.reserve(u.size() * k);
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), u.begin(), u.end());
    return out;
}

Word random_word(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t max_length) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alphabet_size) - 1);
    Word w(len(rng));
    for (auto& a : w) a = letter(rng);
    return w;
}

} // namespace

bool CanonicalPreorder::leq(const Word& u, const Word& v) const { return subset(profile(u), profile(v)); }

bool CanonicalPreorder::leq(Element s, Element t) const {
    return subset(element_profiles_.at(static_cast<std::size_t>(s)), element_profiles_.at(static_cast<std::size_t>(t)));
}

CharPropertyReport check_char_property(const Dfa& lang, const CanonicalPreorder& preorder,
                                       const PolExpr& expr, std::size_t samples,
                                       std::uint64_t seed) {
    if (!(lang.alphabet() == preorder.lattice().alphabet()))
        throw InputError("alphabet mismatch between language and lattice");
    if (!equivalent(expr_to_dfa(expr), lang)) throw InputError("expression does not denote the language");
    const std::uint64_t n = max_product_boundaries(expr);
    if (n > 64) throw ResourceError("expression has too many concatenations for the sampled check");

    CharPropertyReport report;
    report.h = static_cast<int>(2 * n + 1);
    report.p = preorder.period();

    const auto k = lang.alphabet().size();
    const std::vector<Word> candidates = words_up_to(k, 3);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        CharPropertySample sample;
        sample.x = random_word(rng, k, 4);
        sample.y = random_word(rng, k, 4);
        sample.u = random_word(rng, k, 3);
        std::vector<const Word*> above;
        for (const Word& v : candidates)
            if (preorder.leq(sample.u, v)) above.push_back(&v);
        // u itself is always above u, so `above` is never empty.
        sample.v = *above[std::uniform_int_distribution<std::size_t>(0, above.size() - 1)(rng)];
        sample.ell = report.h + static_cast<int>(i % 3);

        const auto reps = static_cast<std::size_t>(report.p) * static_cast<std::size_t>(sample.ell);
        Word lhs = sample.x;
        Word block = power_of(sample.u, reps);
        lhs.insert(lhs.end(), block.begin(), block.end());
        lhs.insert(lhs.end(), sample.u.begin(), sample.u.end());
        lhs.insert(lhs.end(), sample.y.begin(), sample.y.end());
        Word rhs = sample.x;
        rhs.insert(rhs.end(), block.begin(), block.end());
        rhs.insert(rhs.end(), sample.v.begin(), sample.v.end());
        rhs.insert(rhs.end(), block.begin(), block.end());
        rhs.insert(rhs.end(), sample.y.begin(), sample.y.end());

        sample.premise = accepts(lang, lhs);
        sample.conclusion = accepts(lang, rhs);
        ++report.samples;
        if (sample.premise) ++report.premise_held;
        if (sample.premise && !sample.conclusion) report.violations.push_back(std::move(sample));
    }
    return report;
}

// ---------------------------------------------------------------- class specs

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trimmed(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

Dfa load_dfa_checked(const std::filesystem::path& path, const Alphabet& alphabet) {
    Dfa d = parse_dfa_text(read_file(path));
    if (!(d.alphabet() == alphabet))
        throw InputError("'" + path.string() + "' is over alphabet '" + d.alphabet().to_utf8() +
                         "', expected '" + alphabet.to_utf8() + "'");
    return d;
}

} // namespace

std::vector<Dfa> load_generators(const std::string& path, const Alphabet& alphabet) {
    namespace fs = std::filesystem;
    std::vector<Dfa> out;
    const fs::path root(path);
    if (fs::is_directory(root)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(root))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            if (f.extension() == ".dfa")
                out.push_back(load_dfa_checked(f, alphabet));
            else if (f.extension() == ".regex")
                out.push_back(compile_regex(trimmed(read_file(f)), alphabet));
        }
    } else {
        std::istringstream in(read_file(root));
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            line = trimmed(line);
            if (line.empty() || line.front() == '#') continue;
            if (line.rfind("dfa:", 0) == 0) {
                fs::path p(trimmed(line.substr(4)));
                if (p.is_relative()) p = root.parent_path() / p;
                out.push_back(load_dfa_checked(p, alphabet));
            } else if (line.rfind("regex:", 0) == 0) {
                out.push_back(compile_regex(trimmed(line.substr(6)), alphabet));
            } else {
                throw InputError(path + ":" + std::to_string(line_no) +
                                 ": expected 'dfa: <path>' or 'regex: <expr>'");
            }
        }
    }
    if (out.empty()) throw InputError("no lattice generators found at '" + path + "'");
    return out;
}

std::unique_ptr<BaseClass> make_class(const std::string& spec, const Alphabet& alphabet) {
    if (spec == "st" || spec == "ST") return std::make_unique<TrivialClass>(alphabet);
    if (spec == "at" || spec == "AT") return std::make_unique<AlphabetTestableClass>(alphabet);
    if (spec.rfind("lattice:", 0) == 0) {
        auto generators = load_generators(spec.substr(8), alphabet);
        return std::make_unique<LatticeClass>(saturate_lattice(generators), "lattice");
    }
    throw InputError("unknown class '" + spec + "' (expected st, at, or lattice:<path>)");
}

} // namespace polc
