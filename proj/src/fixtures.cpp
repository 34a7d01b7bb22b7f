#include "polc/fixtures.hpp"

#include "polc/errors.hpp"

namespace polc {

namespace {

const Alphabet& ab() {
    static const Alphabet alphabet(U"ab");
    return alphabet;
}

struct RegexFixture {
    const char* name;
    const char* regex;
};

constexpr RegexFixture regex_fixtures[] = {
    {"A*aA*", "(a|b)*a(a|b)*"},
    {"(ab)*", "(ab)*"},
    {"b*", "b*"},
    {"A*", "(a|b)*"},
    {"eps", "()"},
    {"a*b*", "a*b*"},
    {"A*aA*bA*", "(a|b)*a(a|b)*b(a|b)*"},
    {"aA*", "a(a|b)*"},
    {"A*ab", "(a|b)*ab"},
    {"(aa|b)*", "(aa|b)*"},
};

} // namespace

std::vector<Fixture> fixtures() {
    std::vector<Fixture> out;
    for (const auto& f : regex_fixtures) out.push_back({f.name, compile_regex(f.regex, ab())});
    out.push_back({"empty", Dfa::empty(ab())});
    return out;
}

Dfa fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f.language;
    throw InputError("unknown fixture '" + name + "'");
}

Dfa random_dfa(std::mt19937_64& rng, int max_states, std::size_t letters) {
    static const std::u32string letter_pool = U"abcdefghijklmnop";
    if (letters == 0 || letters > letter_pool.size()) throw InputError("unsupported letter count");
    Alphabet alphabet(letter_pool.substr(0, letters));
    const int n = std::uniform_int_distribution<int>(1, max_states)(rng);
    std::uniform_int_distribution<int> state(0, n - 1);
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> finals(static_cast<std::size_t>(n));
    for (std::size_t q = 0; q < finals.size(); ++q) finals[q] = coin(rng);
    std::vector<int> delta(static_cast<std::size_t>(n) * letters);
    for (auto& d : delta) d = state(rng);
    return minimize(Dfa(std::move(alphabet), n, 0, std::move(finals), std::move(delta)));
}

SyntacticData random_syntactic(std::mt19937_64& rng, int max_states, std::size_t letters, int max_size) {
    for (;;) {
        Dfa d = random_dfa(rng, max_states, letters);
        try {
            return syntactic(d, static_cast<std::size_t>(max_size));
        } catch (const ResourceError&) {
        }
    }
}

FiniteLattice random_lattice(std::mt19937_64& rng, const Alphabet& alphabet, int max_states, std::size_t cap) {
    for (;;) {
        Dfa g = random_dfa(rng, max_states, alphabet.size());
        Dfa gen(alphabet, g.size(), g.initial(), g.finals(), g.transitions());
        try {
            return saturate_lattice(std::span<const Dfa>(&gen, 1), cap);
        } catch (const ResourceError&) {
        }
    }
}

Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_length) {
    Word w(std::uniform_int_distribution<std::size_t>(0, max_length)(rng));
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(letters) - 1);
    for (auto& a : w) a = letter(rng);
    return w;
}

Relation multiplicative_closure(const FiniteMonoid& m, Relation seeds) {
    const int n = m.size();
    Relation r = std::move(seeds);
    for (Element s = 0; s < n; ++s) r.set(s, s);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::pair<Element, Element>> pairs;
        for (Element s = 0; s < n; ++s)
            for (Element t = 0; t < n; ++t)
                if (r.test(s, t)) pairs.emplace_back(s, t);
        for (auto [s1, t1] : pairs)
            for (auto [s2, t2] : pairs) {
                Element x = m.multiply(s1, s2), y = m.multiply(t1, t2);
                if (!r.test(x, y)) {
                    r.set(x, y);
                    grew = true;
                }
            }
    }
    return r;
}

} // namespace polc
