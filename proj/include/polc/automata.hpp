#pragma once

// Finite automata over a fixed ordered alphabet.
//
// Every operation returning a Dfa returns the minimal complete automaton in
// canonical form: state 0 is initial and states are numbered in breadth-first
// order over the ordered alphabet, so equal languages yield identical values.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polc {

/// Index of a letter in its alphabet.
using Letter = int;
/// A word is a sequence of letter indices.
using Word = std::vector<Letter>;

class Alphabet {
public:
    /// Throws InputError when empty or when a letter repeats.
    explicit Alphabet(std::u32string letters);
    static Alphabet from_utf8(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    char32_t symbol(Letter a) const { return letters_.at(static_cast<std::size_t>(a)); }
    std::optional<Letter> find(char32_t symbol) const;
    const std::u32string& symbols() const noexcept { return letters_; }

    std::string to_utf8() const;
    /// UTF-8 rendering of a word; the empty word renders as "ε".
    std::string format(const Word& w) const;
    /// Parses a UTF-8 word; throws InputError on a letter outside the alphabet.
    Word parse_word(std::string_view text) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::u32string letters_;
};

class Dfa {
public:
    /// `delta[q * |A| + a]` is the successor of q under a. Validates totality and ranges.
    Dfa(Alphabet alphabet, int num_states, int initial, std::vector<bool> finals,
        std::vector<int> delta);

    static Dfa empty(const Alphabet& alphabet);
    static Dfa universal(const Alphabet& alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    int size() const noexcept { return num_states_; }
    int initial() const noexcept { return initial_; }
    bool is_final(int q) const { return finals_[static_cast<std::size_t>(q)]; }
    const std::vector<bool>& finals() const noexcept { return finals_; }
    int next(int q, Letter a) const {
        return delta_[static_cast<std::size_t>(q) * alphabet_.size() + static_cast<std::size_t>(a)];
    }
    int run(int q, const Word& w) const;
    const std::vector<int>& transitions() const noexcept { return delta_; }

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    Alphabet alphabet_;
    int num_states_;
    int initial_;
    std::vector<bool> finals_;
    std::vector<int> delta_;
};

class Nfa {
public:
    static constexpr Letter epsilon = -1;

    explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    int add_state();
    void add_edge(int from, Letter label, int to);
    void add_initial(int q) { initials_.push_back(q); }
    void set_final(int q, bool final = true);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<int>& initials() const noexcept { return initials_; }
    bool is_final(int q) const { return finals_[static_cast<std::size_t>(q)]; }
    const std::vector<std::pair<Letter, int>>& edges(int q) const {
        return edges_[static_cast<std::size_t>(q)];
    }

    /// Direct simulation on state sets, independent of compile().
    bool accepts(const Word& w) const;

    static Nfa from_dfa(const Dfa& dfa);

private:
    Alphabet alphabet_;
    std::vector<int> initials_;
    std::vector<bool> finals_;
    std::vector<std::vector<std::pair<Letter, int>>> edges_;
};

/// Grammar: expr := term ('|' term)* ; term := factor+ ; factor := atom '*'? ;
/// atom := letter | '(' expr ')' | '()'. Whitespace is ignored.
Nfa parse_regex(std::string_view text, const Alphabet& alphabet);

/// Determinize, minimize, and canonically renumber.
Dfa compile(const Nfa& nfa);
/// Minimal canonical form of an arbitrary complete DFA.
Dfa minimize(const Dfa& dfa);
/// parse_regex followed by compile.
Dfa compile_regex(std::string_view text, const Alphabet& alphabet);

enum class BoolOp { union_, intersection, complement };
Dfa bool_op(BoolOp kind, const Dfa& x, const Dfa* y = nullptr);
Dfa complement(const Dfa& x);
Dfa union_of(const Dfa& x, const Dfa& y);
Dfa intersection_of(const Dfa& x, const Dfa& y);

enum class Side { left, right };
Dfa quotient(Side side, const Dfa& lang, const Word& u);

Dfa concatenate(const Dfa& x, const Dfa& y);
/// x · {a} · y
Dfa marked_concatenate(const Dfa& x, Letter a, const Dfa& y);
/// Scattered-superword closure: {v | some u in L is a scattered subword of v}.
Dfa upward_closure(const Dfa& lang);

enum class Comparison { is_empty, includes, equivalent };
/// `includes` asks whether x contains y.
bool compare(Comparison kind, const Dfa& x, const Dfa* y = nullptr);
bool is_empty(const Dfa& x);
bool includes(const Dfa& x, const Dfa& y);
bool equivalent(const Dfa& x, const Dfa& y);

/// Shortlex-least word of y that is not in x, if any.
std::optional<Word> counterexample(const Dfa& x, const Dfa& y);
/// Shortlex-least word of the language, if any.
std::optional<Word> shortest_word(const Dfa& x);

bool accepts(const Dfa& lang, const Word& w);

/// Line-based text format: `alphabet:`, `states:`, `initial:`, `finals:`, then
/// one `state letter state` line per transition.
std::string to_text(const Dfa& dfa);
Dfa parse_dfa_text(std::string_view text);

void require_same_alphabet(const Dfa& x, const Dfa& y);

/// Every word over the alphabet of length at most `max_length`, in shortlex order.
std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length);

} // namespace polc
