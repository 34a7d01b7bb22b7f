#include "polc/automata.hpp"

#include "polc/errors.hpp"
#include "utf8.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace polc {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::u32string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw InputError("alphabet must not be empty");
    for (std::size_t i = 0; i < letters_.size(); ++i)
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] == letters_[j])
                throw InputError("duplicate letter '" + detail::encode_utf8(letters_[i]) +
                                 "' in alphabet");
}

Alphabet Alphabet::from_utf8(std::string_view text) {
    std::u32string letters;
    for (const auto& cp : detail::decode_utf8(text)) letters.push_back(cp.value);
    return Alphabet(std::move(letters));
}

std::optional<Letter> Alphabet::find(char32_t symbol) const {
    auto pos = letters_.find(symbol);
    if (pos == std::u32string::npos) return std::nullopt;
    return static_cast<Letter>(pos);
}

std::string Alphabet::to_utf8() const {
    std::string out;
    for (char32_t c : letters_) out += detail::encode_utf8(c);
    return out;
}

std::string Alphabet::format(const Word& w) const {
    if (w.empty()) return "ε";
    std::string out;
    for (Letter a : w) out += detail::encode_utf8(symbol(a));
    return out;
}

Word Alphabet::parse_word(std::string_view text) const {
    Word w;
    if (text == "ε") return w;
    for (const auto& cp : detail::decode_utf8(text)) {
        auto a = find(cp.value);
        if (!a)
            throw InputError("letter '" + detail::encode_utf8(cp.value) +
                             "' is not in the alphabet");
        w.push_back(*a);
    }
    return w;
}

// ---------------------------------------------------------------- Dfa

Dfa::Dfa(Alphabet alphabet, int num_states, int initial, std::vector<bool> finals,
         std::vector<int> delta)
    : alphabet_(std::move(alphabet)), num_states_(num_states), initial_(initial),
      finals_(std::move(finals)), delta_(std::move(delta)) {
    if (num_states_ < 1) throw InputError("a DFA needs at least one state");
    if (initial_ < 0 || initial_ >= num_states_) throw InputError("initial state out of range");
    if (finals_.size() != static_cast<std::size_t>(num_states_))
        throw InputError("final-state vector has wrong length");
    if (delta_.size() != static_cast<std::size_t>(num_states_) * alphabet_.size())
        throw InputError("transition table is not total");
    for (int q : delta_)
        if (q < 0 || q >= num_states_) throw InputError("transition target out of range");
}

Dfa Dfa::empty(const Alphabet& alphabet) {
    return Dfa(alphabet, 1, 0, {false}, std::vector<int>(alphabet.size(), 0));
}

Dfa Dfa::universal(const Alphabet& alphabet) {
    return Dfa(alphabet, 1, 0, {true}, std::vector<int>(alphabet.size(), 0));
}

int Dfa::run(int q, const Word& w) const {
    for (Letter a : w) q = next(q, a);
    return q;
}

// ---------------------------------------------------------------- Nfa

int Nfa::add_state() {
    edges_.emplace_back();
    finals_.push_back(false);
    return size() - 1;
}

void Nfa::add_edge(int from, Letter label, int to) {
    edges_.at(static_cast<std::size_t>(from)).emplace_back(label, to);
}

void Nfa::set_final(int q, bool final) { finals_.at(static_cast<std::size_t>(q)) = final; }

namespace {

void epsilon_close(const Nfa& nfa, std::vector<int>& set) {
    std::vector<bool> seen(static_cast<std::size_t>(nfa.size()), false);
    for (int q : set) seen[static_cast<std::size_t>(q)] = true;
    std::vector<int> stack = set;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (auto [label, to] : nfa.edges(q))
            if (label == Nfa::epsilon && !seen[static_cast<std::size_t>(to)]) {
                seen[static_cast<std::size_t>(to)] = true;
                set.push_back(to);
                stack.push_back(to);
            }
    }
    std::sort(set.begin(), set.end());
}

std::vector<int> step(const Nfa& nfa, const std::vector<int>& set, Letter a) {
    std::vector<int> out;
    for (int q : set)
        for (auto [label, to] : nfa.edges(q))
            if (label == a) out.push_back(to);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    epsilon_close(nfa, out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

bool Nfa::accepts(const Word& w) const {
    std::vector<int> current = initials_;
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
    epsilon_close(*this, current);
    for (Letter a : w) current = step(*this, current, a);
    return std::any_of(current.begin(), current.end(), [&](int q) { return is_final(q); });
}

Nfa Nfa::from_dfa(const Dfa& dfa) {
    Nfa nfa(dfa.alphabet());
    for (int q = 0; q < dfa.size(); ++q) nfa.add_state();
    for (int q = 0; q < dfa.size(); ++q) {
        nfa.set_final(q, dfa.is_final(q));
        for (Letter a = 0; a < static_cast<Letter>(dfa.alphabet().size()); ++a)
            nfa.add_edge(q, a, dfa.next(q, a));
    }
    nfa.add_initial(dfa.initial());
    return nfa;
}

// ---------------------------------------------------------------- regex

namespace {

struct Fragment {
    int start;
    int end;
};

class RegexParser {
public:
    RegexParser(std::string_view text, const Alphabet& alphabet)
        : alphabet_(alphabet), nfa_(alphabet), text_size_(text.size()) {
        for (const auto& cp : detail::decode_utf8(text))
            if (!(cp.value < 128 && std::isspace(static_cast<int>(cp.value))))
                tokens_.push_back(cp);
    }

    Nfa parse() {
        if (tokens_.empty())
            throw RegexError("empty pattern rejected; use () for the empty word", 0);
        Fragment f = expr();
        if (pos_ < tokens_.size()) {
            if (peek() == U')') throw RegexError("unbalanced ')'", offset());
            throw RegexError("unexpected symbol", offset());
        }
        nfa_.add_initial(f.start);
        nfa_.set_final(f.end);
        return std::move(nfa_);
    }

private:
    char32_t peek() const { return pos_ < tokens_.size() ? tokens_[pos_].value : U'\0'; }
    bool at_end() const { return pos_ >= tokens_.size(); }
    std::size_t offset() const { return at_end() ? text_size_ : tokens_[pos_].offset; }

    Fragment epsilon_fragment() {
        int s = nfa_.add_state(), e = nfa_.add_state();
        nfa_.add_edge(s, Nfa::epsilon, e);
        return {s, e};
    }

    Fragment expr() {
        Fragment left = term();
        while (!at_end() && peek() == U'|') {
            ++pos_;
            Fragment right = term();
            int s = nfa_.add_state(), e = nfa_.add_state();
            nfa_.add_edge(s, Nfa::epsilon, left.start);
            nfa_.add_edge(s, Nfa::epsilon, right.start);
            nfa_.add_edge(left.end, Nfa::epsilon, e);
            nfa_.add_edge(right.end, Nfa::epsilon, e);
            left = {s, e};
        }
        return left;
    }

    bool starts_atom() const {
        if (at_end()) return false;
        char32_t c = peek();
        return c != U'|' && c != U')' && c != U'*';
    }

    Fragment term() {
        if (!starts_atom()) throw RegexError("expected a letter or '('", offset());
        Fragment f = factor();
        while (starts_atom()) {
            Fragment g = factor();
            nfa_.add_edge(f.end, Nfa::epsilon, g.start);
            f.end = g.end;
        }
        return f;
    }

    Fragment factor() {
        Fragment f = atom();
        while (!at_end() && peek() == U'*') {
            ++pos_;
            int s = nfa_.add_state(), e = nfa_.add_state();
            nfa_.add_edge(s, Nfa::epsilon, f.start);
            nfa_.add_edge(s, Nfa::epsilon, e);
            nfa_.add_edge(f.end, Nfa::epsilon, f.start);
            nfa_.add_edge(f.end, Nfa::epsilon, e);
            f = {s, e};
        }
        return f;
    }

    Fragment atom() {
        char32_t c = peek();
        if (c == U'(') {
            std::size_t open = offset();
            ++pos_;
            if (!at_end() && peek() == U')') {
                ++pos_;
                return epsilon_fragment();
            }
            Fragment f = expr();
            if (at_end() || peek() != U')')
                throw RegexError("missing ')' for '(' opened at byte " + std::to_string(open),
                                 offset());
            ++pos_;
            return f;
        }
        auto letter = alphabet_.find(c);
        if (!letter)
            throw RegexError("letter '" + detail::encode_utf8(c) + "' is not in the alphabet",
                             offset());
        ++pos_;
        int s = nfa_.add_state(), e = nfa_.add_state();
        nfa_.add_edge(s, *letter, e);
        return {s, e};
    }

    const Alphabet& alphabet_;
    Nfa nfa_;
    std::vector<detail::CodePoint> tokens_;
    std::size_t pos_ = 0;
    std::size_t text_size_;
};

} // namespace

Nfa parse_regex(std::string_view text, const Alphabet& alphabet) {
    return RegexParser(text, alphabet).parse();
}

// ---------------------------------------------------------------- compile / minimize

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Subset construction; the empty subset becomes the sink.
Dfa determinize(const Nfa& nfa) {
    const auto k = nfa.alphabet().size();
    std::unordered_map<std::vector<int>, int, VectorHash> ids;
    std::vector<std::vector<int>> sets;
    std::vector<int> delta;
    std::vector<bool> finals;

    std::vector<int> start = nfa.initials();
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    epsilon_close(nfa, start);
    start.erase(std::unique(start.begin(), start.end()), start.end());
    ids.emplace(start, 0);
    sets.push_back(start);

    for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::vector<int> current = sets[i];
        finals.push_back(std::any_of(current.begin(), current.end(),
                                     [&](int q) { return nfa.is_final(q); }));
        for (Letter a = 0; a < static_cast<Letter>(k); ++a) {
            std::vector<int> target = step(nfa, current, a);
            auto [it, inserted] = ids.emplace(target, static_cast<int>(sets.size()));
            if (inserted) sets.push_back(std::move(target));
            delta.push_back(it->second);
        }
    }
    return Dfa(nfa.alphabet(), static_cast<int>(sets.size()), 0, std::move(finals),
               std::move(delta));
}

// Renumber the states reachable from `initial` in breadth-first order, with
// `classes` mapping original states to (possibly merged) state ids.
Dfa canonical_renumbering(const Dfa& dfa, const std::vector<int>& classes, int num_classes) {
    const auto k = dfa.alphabet().size();
    std::vector<int> representative(static_cast<std::size_t>(num_classes), -1);
    for (int q = dfa.size() - 1; q >= 0; --q) representative[static_cast<std::size_t>(classes[static_cast<std::size_t>(q)])] = q;

    std::vector<int> order(static_cast<std::size_t>(num_classes), -1);
    std::vector<int> queue{classes[static_cast<std::size_t>(dfa.initial())]};
    order[static_cast<std::size_t>(queue[0])] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int q = representative[static_cast<std::size_t>(queue[i])];
        for (Letter a = 0; a < static_cast<Letter>(k); ++a) {
            int c = classes[static_cast<std::size_t>(dfa.next(q, a))];
            if (order[static_cast<std::size_t>(c)] < 0) {
                order[static_cast<std::size_t>(c)] = static_cast<int>(queue.size());
                queue.push_back(c);
            }
        }
    }
    const int n = static_cast<int>(queue.size());
    std::vector<bool> finals(static_cast<std::size_t>(n));
    std::vector<int> delta(static_cast<std::size_t>(n) * k);
    for (int i = 0; i < n; ++i) {
        int q = representative[static_cast<std::size_t>(queue[static_cast<std::size_t>(i)])];
        finals[static_cast<std::size_t>(i)] = dfa.is_final(q);
        for (Letter a = 0; a < static_cast<Letter>(k); ++a)
            delta[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(a)] =
                order[static_cast<std::size_t>(classes[static_cast<std::size_t>(dfa.next(q, a))])];
    }
    return Dfa(dfa.alphabet(), n, 0, std::move(finals), std::move(delta));
}

} // namespace

Dfa minimize(const Dfa& input) {
    // Drop unreachable states first so that refinement only sees live ones.
    std::vector<int> identity(static_cast<std::size_t>(input.size()));
    for (int q = 0; q < input.size(); ++q) identity[static_cast<std::size_t>(q)] = q;
    const Dfa dfa = canonical_renumbering(input, identity, input.size());

    const auto n = static_cast<std::size_t>(dfa.size());
    const auto k = dfa.alphabet().size();
    std::vector<int> classes(n);
    int num_classes = 0;
    {
        bool any_final = false, any_nonfinal = false;
        for (std::size_t q = 0; q < n; ++q) (dfa.is_final(static_cast<int>(q)) ? any_final : any_nonfinal) = true;
        num_classes = (any_final && any_nonfinal) ? 2 : 1;
        for (std::size_t q = 0; q < n; ++q)
            classes[q] = (num_classes == 2 && dfa.is_final(static_cast<int>(q))) ? 1 : 0;
    }

    // Moore refinement: split by (class, successor classes) until stable.
    std::vector<int> signature(k + 1);
    while (true) {
        std::unordered_map<std::vector<int>, int, VectorHash> ids;
        std::vector<int> refined(n);
        for (std::size_t q = 0; q < n; ++q) {
            signature[0] = classes[q];
            for (std::size_t a = 0; a < k; ++a)
                signature[a + 1] = classes[static_cast<std::size_t>(dfa.next(static_cast<int>(q), static_cast<Letter>(a)))];
            auto [it, inserted] = ids.emplace(signature, static_cast<int>(ids.size()));
            refined[q] = it->second;
        }
        const int refined_count = static_cast<int>(ids.size());
        classes = std::move(refined);
        if (refined_count == num_classes) break;
        num_classes = refined_count;
    }
    return canonical_renumbering(dfa, classes, num_classes);
}

Dfa compile(const Nfa& nfa) { return minimize(determinize(nfa)); }

Dfa compile_regex(std::string_view text, const Alphabet& alphabet) {
    return compile(parse_regex(text, alphabet));
}

// ---------------------------------------------------------------- boolean operations

void require_same_alphabet(const Dfa& x, const Dfa& y) {
    if (!(x.alphabet() == y.alphabet()))
        throw InputError("alphabet mismatch: '" + x.alphabet().to_utf8() + "' vs '" +
                         y.alphabet().to_utf8() + "'");
}

namespace {

template <typename Combine>
Dfa product(const Dfa& x, const Dfa& y, Combine combine) {
    require_same_alphabet(x, y);
    const auto k = x.alphabet().size();
    std::unordered_map<std::uint64_t, int> ids;
    std::vector<std::pair<int, int>> states;
    std::vector<int> delta;
    std::vector<bool> finals;
    auto id_of = [&](int p, int q) {
        auto key = (static_cast<std::uint64_t>(p) << 32) | static_cast<std::uint32_t>(q);
        auto [it, inserted] = ids.emplace(key, static_cast<int>(states.size()));
        if (inserted) states.emplace_back(p, q);
        return it->second;
    };
    id_of(x.initial(), y.initial());
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [p, q] = states[i];
        finals.push_back(combine(x.is_final(p), y.is_final(q)));
        for (Letter a = 0; a < static_cast<Letter>(k); ++a)
            delta.push_back(id_of(x.next(p, a), y.next(q, a)));
    }
    return minimize(Dfa(x.alphabet(), static_cast<int>(states.size()), 0, std::move(finals),
                        std::move(delta)));
}

} // namespace

Dfa complement(const Dfa& x) {
    std::vector<bool> finals(x.finals());
    finals.flip();
    return minimize(Dfa(x.alphabet(), x.size(), x.initial(), std::move(finals), x.transitions()));
}

Dfa union_of(const Dfa& x, const Dfa& y) {
    return product(x, y, [](bool a, bool b) { return a || b; });
}

Dfa intersection_of(const Dfa& x, const Dfa& y) {
    return product(x, y, [](bool a, bool b) { return a && b; });
}

Dfa bool_op(BoolOp kind, const Dfa& x, const Dfa* y) {
    switch (kind) {
    case BoolOp::complement:
        return complement(x);
    case BoolOp::union_:
    case BoolOp::intersection:
        if (!y) throw InputError("binary operation needs two automata");
        return kind == BoolOp::union_ ? union_of(x, *y) : intersection_of(x, *y);
    }
    throw InputError("unknown boolean operation");
}

Dfa quotient(Side side, const Dfa& lang, const Word& u) {
    if (side == Side::left)
        return minimize(Dfa(lang.alphabet(), lang.size(), lang.run(lang.initial(), u),
                            lang.finals(), lang.transitions()));
    std::vector<bool> finals(static_cast<std::size_t>(lang.size()));
    for (int q = 0; q < lang.size(); ++q) finals[static_cast<std::size_t>(q)] = lang.is_final(lang.run(q, u));
    return minimize(Dfa(lang.alphabet(), lang.size(), lang.initial(), std::move(finals),
                        lang.transitions()));
}

namespace {

Nfa joined(const Dfa& x, std::optional<Letter> mark, const Dfa& y) {
    require_same_alphabet(x, y);
    Nfa nfa(x.alphabet());
    const auto k = static_cast<Letter>(x.alphabet().size());
    for (int q = 0; q < x.size() + y.size(); ++q) nfa.add_state();
    const int shift = x.size();
    for (int q = 0; q < x.size(); ++q)
        for (Letter a = 0; a < k; ++a) nfa.add_edge(q, a, x.next(q, a));
    for (int q = 0; q < y.size(); ++q) {
        for (Letter a = 0; a < k; ++a) nfa.add_edge(shift + q, a, shift + y.next(q, a));
        nfa.set_final(shift + q, y.is_final(q));
    }
    for (int q = 0; q < x.size(); ++q)
        if (x.is_final(q)) nfa.add_edge(q, mark.value_or(Nfa::epsilon), shift + y.initial());
    nfa.add_initial(x.initial());
    return nfa;
}

} // namespace

Dfa concatenate(const Dfa& x, const Dfa& y) { return compile(joined(x, std::nullopt, y)); }

Dfa marked_concatenate(const Dfa& x, Letter a, const Dfa& y) {
    if (a < 0 || static_cast<std::size_t>(a) >= x.alphabet().size())
        throw InputError("marker letter out of range");
    return compile(joined(x, a, y));
}

Dfa upward_closure(const Dfa& lang) {
    Nfa nfa = Nfa::from_dfa(lang);
    for (int q = 0; q < nfa.size(); ++q)
        for (Letter a = 0; a < static_cast<Letter>(lang.alphabet().size()); ++a)
            nfa.add_edge(q, a, q);
    return compile(nfa);
}

// ---------------------------------------------------------------- comparisons

std::optional<Word> counterexample(const Dfa& x, const Dfa& y) {
    require_same_alphabet(x, y);
    const auto k = x.alphabet().size();
    struct Node {
        int p, q, parent;
        Letter via;
    };
    std::unordered_map<std::uint64_t, int> seen;
    std::vector<Node> nodes{{x.initial(), y.initial(), -1, 0}};
    seen.emplace((static_cast<std::uint64_t>(x.initial()) << 32) | static_cast<std::uint32_t>(y.initial()), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node node = nodes[i];
        if (y.is_final(node.q) && !x.is_final(node.p)) {
            Word w;
            for (int j = static_cast<int>(i); nodes[static_cast<std::size_t>(j)].parent >= 0; j = nodes[static_cast<std::size_t>(j)].parent)
                w.push_back(nodes[static_cast<std::size_t>(j)].via);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (Letter a = 0; a < static_cast<Letter>(k); ++a) {
            int p = x.next(node.p, a), q = y.next(node.q, a);
            auto key = (static_cast<std::uint64_t>(p) << 32) | static_cast<std::uint32_t>(q);
            if (seen.emplace(key, static_cast<int>(nodes.size())).second)
                nodes.push_back({p, q, static_cast<int>(i), a});
        }
    }
    return std::nullopt;
}

std::optional<Word> shortest_word(const Dfa& x) {
    return counterexample(Dfa::empty(x.alphabet()), x);
}

bool is_empty(const Dfa& x) { return !shortest_word(x).has_value(); }

bool includes(const Dfa& x, const Dfa& y) { return !counterexample(x, y).has_value(); }

bool equivalent(const Dfa& x, const Dfa& y) { return includes(x, y) && includes(y, x); }

bool compare(Comparison kind, const Dfa& x, const Dfa* y) {
    if (kind == Comparison::is_empty) return is_empty(x);
    if (!y) throw InputError("binary comparison needs two automata");
    return kind == Comparison::includes ? includes(x, *y) : equivalent(x, *y);
}

bool accepts(const Dfa& lang, const Word& w) { return lang.is_final(lang.run(lang.initial(), w)); }

// ---------------------------------------------------------------- text format

std::string to_text(const Dfa& dfa) {
    std::ostringstream out;
    out << "alphabet: " << dfa.alphabet().to_utf8() << '\n';
    out << "states: " << dfa.size() << '\n';
    out << "initial: " << dfa.initial() << '\n';
    out << "finals:";
    for (int q = 0; q < dfa.size(); ++q)
        if (dfa.is_final(q)) out << ' ' << q;
    out << '\n';
    for (int q = 0; q < dfa.size(); ++q)
        for (Letter a = 0; a < static_cast<Letter>(dfa.alphabet().size()); ++a)
            out << q << ' ' << detail::encode_utf8(dfa.alphabet().symbol(a)) << ' '
                << dfa.next(q, a) << '\n';
    return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, int line) {
    s = trim(s);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InputError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                         std::string(s) + "'");
    return std::stoi(std::string(s));
}

} // namespace

Dfa parse_dfa_text(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::optional<int> states, initial;
    std::optional<std::vector<int>> final_list;
    std::vector<int> delta;
    std::vector<bool> defined;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto header = [&](std::string_view key) -> std::optional<std::string_view> {
            if (line.substr(0, key.size()) == key) return trim(line.substr(key.size()));
            return std::nullopt;
        };
        if (auto v = header("alphabet:")) {
            alphabet = Alphabet::from_utf8(*v);
        } else if (auto v = header("states:")) {
            states = parse_int(*v, line_no);
        } else if (auto v = header("initial:")) {
            initial = parse_int(*v, line_no);
        } else if (auto v = header("finals:")) {
            final_list.emplace();
            std::istringstream fs{std::string(*v)};
            std::string tok;
            while (fs >> tok) final_list->push_back(parse_int(tok, line_no));
        } else {
            if (!alphabet || !states)
                throw InputError("line " + std::to_string(line_no) +
                                 ": transition before alphabet/states header");
            if (delta.empty()) {
                delta.assign(static_cast<std::size_t>(*states) * alphabet->size(), 0);
                defined.assign(delta.size(), false);
            }
            std::istringstream ts{std::string(line)};
            std::string from, letter, to, extra;
            if (!(ts >> from >> letter >> to) || (ts >> extra))
                throw InputError("line " + std::to_string(line_no) +
                                 ": expected 'state letter state'");
            int p = parse_int(from, line_no), q = parse_int(to, line_no);
            auto cps = detail::decode_utf8(letter);
            if (cps.size() != 1)
                throw InputError("line " + std::to_string(line_no) + ": letter must be one symbol");
            auto a = alphabet->find(cps[0].value);
            if (!a)
                throw InputError("line " + std::to_string(line_no) + ": letter '" + letter +
                                 "' is not in the alphabet");
            if (p >= *states || q >= *states)
                throw InputError("line " + std::to_string(line_no) + ": state out of range");
            auto idx = static_cast<std::size_t>(p) * alphabet->size() + static_cast<std::size_t>(*a);
            if (defined[idx])
                throw InputError("line " + std::to_string(line_no) + ": duplicate transition");
            defined[idx] = true;
            delta[idx] = q;
        }
    }
    if (!alphabet) throw InputError("missing 'alphabet:' header");
    if (!states) throw InputError("missing 'states:' header");
    if (!initial) throw InputError("missing 'initial:' header");
    if (!final_list) throw InputError("missing 'finals:' header");
    if (delta.empty() || !std::all_of(defined.begin(), defined.end(), [](bool b) { return b; }))
        throw InputError("every (state, letter) pair needs exactly one transition");
    std::vector<bool> finals(static_cast<std::size_t>(*states), false);
    for (int q : *final_list) {
        if (q >= *states) throw InputError("final state out of range");
        finals[static_cast<std::size_t>(q)] = true;
    }
    return Dfa(*alphabet, *states, *initial, std::move(finals), std::move(delta));
}

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (Letter a = 0; a < static_cast<Letter>(alphabet_size); ++a) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

} // namespace polc
