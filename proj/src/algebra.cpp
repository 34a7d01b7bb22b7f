#include "polc/algebra.hpp"

#include "polc/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace polc {

// ---------------------------------------------------------------- Relation

Relation::Relation(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (std::size_t s = 0; s < n; ++s) r.set(static_cast<Element>(s), static_cast<Element>(s));
    return r;
}

Relation Relation::full(std::size_t n) {
    Relation r(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) r.set(static_cast<Element>(s), static_cast<Element>(t));
    return r;
}

void Relation::set(Element s, Element t, bool value) {
    auto idx = static_cast<std::size_t>(t);
    std::uint64_t mask = std::uint64_t{1} << (idx % 64);
    if (value)
        row(s)[idx / 64] |= mask;
    else
        row(s)[idx / 64] &= ~mask;
}

bool Relation::contains(const Relation& other) const {
    if (other.n_ != n_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (other.bits_[i] & ~bits_[i]) return false;
    return true;
}

std::size_t Relation::count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Relation::is_reflexive() const {
    for (std::size_t s = 0; s < n_; ++s)
        if (!test(static_cast<Element>(s), static_cast<Element>(s))) return false;
    return true;
}

bool Relation::is_transitive() const {
    for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = 0; t < n_; ++t) {
            if (!test(static_cast<Element>(s), static_cast<Element>(t))) continue;
            // row(t) ⊆ row(s)
            const auto* rs = row(static_cast<Element>(s));
            const auto* rt = row(static_cast<Element>(t));
            for (std::size_t w = 0; w < words_; ++w)
                if (rt[w] & ~rs[w]) return false;
        }
    return true;
}

bool Relation::is_antisymmetric() const {
    for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = s + 1; t < n_; ++t)
            if (test(static_cast<Element>(s), static_cast<Element>(t)) &&
                test(static_cast<Element>(t), static_cast<Element>(s)))
                return false;
    return true;
}

void Relation::close_reflexive_transitive() {
    for (std::size_t s = 0; s < n_; ++s) set(static_cast<Element>(s), static_cast<Element>(s));
    for (std::size_t k = 0; k < n_; ++k) {
        const auto* rk = row(static_cast<Element>(k));
        for (std::size_t i = 0; i < n_; ++i) {
            if (!test(static_cast<Element>(i), static_cast<Element>(k))) continue;
            auto* ri = row(static_cast<Element>(i));
            for (std::size_t w = 0; w < words_; ++w) ri[w] |= rk[w];
        }
    }
}

// ---------------------------------------------------------------- FiniteMonoid

FiniteMonoid::FiniteMonoid(int size, std::vector<int> table, Element neutral)
    : size_(size), table_(std::move(table)), neutral_(neutral) {
    if (size_ < 1) throw InputError("a monoid has at least one element");
    if (table_.size() != static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_))
        throw InputError("multiplication table has wrong size");
    for (int v : table_)
        if (v < 0 || v >= size_) throw InputError("multiplication table entry out of range");
    if (neutral_ < 0 || neutral_ >= size_) throw InputError("neutral element out of range");
    for (Element s = 0; s < size_; ++s)
        if (multiply(neutral_, s) != s || multiply(s, neutral_) != s)
            throw InputError("neutral element is not a two-sided identity");
    omega_ = idempotent_power(*this);
}

FiniteMonoid FiniteMonoid::trivial() { return FiniteMonoid(1, {0}, 0); }

Element FiniteMonoid::power(Element s, int k) const {
    Element result = neutral_;
    Element base = s;
    while (k > 0) {
        if (k & 1) result = multiply(result, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return result;
}

bool FiniteMonoid::is_associative() const {
    for (Element r = 0; r < size_; ++r)
        for (Element s = 0; s < size_; ++s)
            for (Element t = 0; t < size_; ++t)
                if (multiply(multiply(r, s), t) != multiply(r, multiply(s, t))) return false;
    return true;
}

int idempotent_power(const FiniteMonoid& m) {
    // s^k is idempotent iff k ≥ index(s) and period(s) divides k.
    std::uint64_t period_lcm = 1;
    int max_index = 1;
    std::vector<int> seen_at(static_cast<std::size_t>(m.size()), 0);
    for (Element s = 0; s < m.size(); ++s) {
        std::fill(seen_at.begin(), seen_at.end(), 0);
        Element p = s;
        int k = 1;
        while (seen_at[static_cast<std::size_t>(p)] == 0) {
            seen_at[static_cast<std::size_t>(p)] = k;
            p = m.multiply(p, s);
            ++k;
        }
        const int index = seen_at[static_cast<std::size_t>(p)];
        const int period = k - index;
        max_index = std::max(max_index, index);
        period_lcm = std::lcm(period_lcm, static_cast<std::uint64_t>(period));
        if (period_lcm > (1u << 30)) throw ResourceError("idempotent power overflows");
    }
    std::uint64_t omega = period_lcm;
    while (omega < static_cast<std::uint64_t>(max_index)) omega += period_lcm;
    return static_cast<int>(omega);
}

std::vector<Element> idempotents(const FiniteMonoid& m) {
    std::vector<Element> out;
    for (Element s = 0; s < m.size(); ++s)
        if (m.is_idempotent(s)) out.push_back(s);
    return out;
}

bool is_upper_set(const ElementSet& subset, const Relation& leq) {
    const auto n = static_cast<Element>(leq.size());
    for (Element s = 0; s < n; ++s) {
        if (!subset[static_cast<std::size_t>(s)]) continue;
        for (Element t = 0; t < n; ++t)
            if (leq.test(s, t) && !subset[static_cast<std::size_t>(t)]) return false;
    }
    return true;
}

bool is_compatible(const Relation& leq, const FiniteMonoid& m) {
    const int n = m.size();
    for (Element s1 = 0; s1 < n; ++s1)
        for (Element t1 = 0; t1 < n; ++t1) {
            if (!leq.test(s1, t1)) continue;
            for (Element s2 = 0; s2 < n; ++s2)
                for (Element t2 = 0; t2 < n; ++t2)
                    if (leq.test(s2, t2) && !leq.test(m.multiply(s1, s2), m.multiply(t1, t2)))
                        return false;
        }
    return true;
}

// ---------------------------------------------------------------- Morphism

Morphism::Morphism(Alphabet alphabet, FiniteMonoid monoid, std::vector<Element> letter_image,
                   std::vector<Word> representative, ElementSet accepting,
                   std::optional<Relation> order)
    : alphabet_(std::move(alphabet)), monoid_(std::move(monoid)),
      letter_image_(std::move(letter_image)), representative_(std::move(representative)),
      accepting_(std::move(accepting)), order_(std::move(order)) {
    const auto n = static_cast<std::size_t>(monoid_.size());
    if (letter_image_.size() != alphabet_.size())
        throw InputError("morphism needs one image per letter");
    if (representative_.size() != n) throw InputError("morphism needs one representative per element");
    if (accepting_.size() != n) throw InputError("accepting set has wrong size");
    if (order_ && order_->size() != n) throw InputError("order has wrong size");
}

Element evaluate(const Morphism& m, const Word& w) {
    Element s = m.monoid().neutral();
    for (Letter a : w) s = m.monoid().multiply(s, m.image(a));
    return s;
}

Dfa preimage_dfa(const Morphism& m, const ElementSet& subset) {
    const auto k = m.alphabet().size();
    const auto n = static_cast<std::size_t>(m.size());
    std::vector<int> delta(n * k);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t a = 0; a < k; ++a)
            delta[s * k + a] = m.monoid().multiply(static_cast<Element>(s), m.image(static_cast<Letter>(a)));
    return Dfa(m.alphabet(), static_cast<int>(n), m.monoid().neutral(), subset, std::move(delta));
}

Dfa preimage_dfa(const Morphism& m, Element s) {
    ElementSet subset(static_cast<std::size_t>(m.size()), false);
    subset[static_cast<std::size_t>(s)] = true;
    return preimage_dfa(m, subset);
}

// ---------------------------------------------------------------- transition monoid

namespace {

struct TransformationHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 14695981039346656037ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

struct TransitionMonoid {
    std::vector<std::vector<int>> transformations; // element -> point map
    std::vector<Word> representative;
    std::vector<Element> parent;
    std::vector<Letter> last_letter;
    std::vector<int> cayley; // element * k + letter -> element
};

TransitionMonoid enumerate_transformations(std::span<const Dfa> automata, std::size_t cap) {
    if (automata.empty()) throw InputError("transition monoid needs at least one automaton");
    const Alphabet& alphabet = automata.front().alphabet();
    const auto k = alphabet.size();
    std::vector<std::vector<int>> letter_maps(k);
    std::vector<int> identity;
    int offset = 0;
    for (const Dfa& d : automata) {
        if (!(d.alphabet() == alphabet)) throw InputError("alphabet mismatch in transition monoid");
        for (int q = 0; q < d.size(); ++q) {
            identity.push_back(offset + q);
            for (std::size_t a = 0; a < k; ++a)
                letter_maps[a].push_back(offset + d.next(q, static_cast<Letter>(a)));
        }
        offset += d.size();
    }

    TransitionMonoid tm;
    std::unordered_map<std::vector<int>, int, TransformationHash> ids;
    ids.emplace(identity, 0);
    tm.transformations.push_back(identity);
    tm.representative.emplace_back();
    tm.parent.push_back(-1);
    tm.last_letter.push_back(-1);
    std::vector<int> next(identity.size());
    for (std::size_t i = 0; i < tm.transformations.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            const auto& current = tm.transformations[i];
            for (std::size_t p = 0; p < next.size(); ++p)
                next[p] = letter_maps[a][static_cast<std::size_t>(current[p])];
            auto [it, inserted] = ids.emplace(next, static_cast<int>(tm.transformations.size()));
            if (inserted) {
                if (tm.transformations.size() >= cap)
                    throw ResourceError("monoid size exceeds the configured cap of " +
                                        std::to_string(cap) + " elements");
                tm.transformations.push_back(next);
                Word w = tm.representative[i];
                w.push_back(static_cast<Letter>(a));
                tm.representative.push_back(std::move(w));
                tm.parent.push_back(static_cast<Element>(i));
                tm.last_letter.push_back(static_cast<Letter>(a));
            }
            tm.cayley.push_back(it->second);
        }
    }
    return tm;
}

FiniteMonoid table_from_cayley(const TransitionMonoid& tm, std::size_t k) {
    const auto n = tm.transformations.size();
    std::vector<int> table(n * n);
    // Elements appear in shortlex order, so parent(t) < t.
    for (std::size_t s = 0; s < n; ++s) {
        table[s * n] = static_cast<int>(s);
        for (std::size_t t = 1; t < n; ++t) {
            auto via = static_cast<std::size_t>(table[s * n + static_cast<std::size_t>(tm.parent[t])]);
            table[s * n + t] = tm.cayley[via * k + static_cast<std::size_t>(tm.last_letter[t])];
        }
    }
    return FiniteMonoid(static_cast<int>(n), std::move(table), 0);
}

} // namespace

Morphism transition_morphism(std::span<const Dfa> automata, std::size_t cap) {
    TransitionMonoid tm = enumerate_transformations(automata, cap);
    const auto k = automata.front().alphabet().size();
    FiniteMonoid monoid = table_from_cayley(tm, k);
    std::vector<Element> images(k);
    for (std::size_t a = 0; a < k; ++a) images[a] = tm.cayley[a];
    ElementSet accepting(tm.transformations.size(), false);
    return Morphism(automata.front().alphabet(), std::move(monoid), std::move(images),
                    std::move(tm.representative), std::move(accepting));
}

SyntacticData syntactic(const Dfa& lang, std::size_t cap) {
    Dfa source = minimize(lang);
    TransitionMonoid tm = enumerate_transformations(std::span<const Dfa>(&source, 1), cap);
    const auto k = source.alphabet().size();
    const auto n = tm.transformations.size();
    const auto states = static_cast<std::size_t>(source.size());
    FiniteMonoid monoid = table_from_cayley(tm, k);

    ElementSet accepting(n);
    for (std::size_t s = 0; s < n; ++s)
        accepting[s] = source.is_final(tm.transformations[s][static_cast<std::size_t>(source.initial())]);

    // included[p][q]: the language read from p is contained in the one read from q.
    std::vector<char> included(states * states);
    for (std::size_t p = 0; p < states; ++p)
        for (std::size_t q = 0; q < states; ++q)
            included[p * states + q] = !(source.is_final(static_cast<int>(p)) && !source.is_final(static_cast<int>(q)));
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t p = 0; p < states; ++p)
            for (std::size_t q = 0; q < states; ++q) {
                if (!included[p * states + q]) continue;
                for (std::size_t a = 0; a < k; ++a) {
                    auto np = static_cast<std::size_t>(source.next(static_cast<int>(p), static_cast<Letter>(a)));
                    auto nq = static_cast<std::size_t>(source.next(static_cast<int>(q), static_cast<Letter>(a)));
                    if (!included[np * states + nq]) {
                        included[p * states + q] = 0;
                        changed = true;
                        break;
                    }
                }
            }
    }

    // Every state of the minimal DFA is x(q0) for some element x, so s ≤ t iff
    // s(q) ⊑ t(q) for every state q.
    Relation order(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            bool ok = true;
            for (std::size_t q = 0; q < states && ok; ++q)
                ok = included[static_cast<std::size_t>(tm.transformations[s][q]) * states +
                              static_cast<std::size_t>(tm.transformations[t][q])];
            if (ok) order.set(static_cast<Element>(s), static_cast<Element>(t));
        }

    std::vector<Element> images(k);
    for (std::size_t a = 0; a < k; ++a) images[a] = tm.cayley[a];
    Morphism morphism(source.alphabet(), std::move(monoid), std::move(images),
                      std::move(tm.representative), std::move(accepting), std::move(order));
    return SyntacticData{std::move(morphism), std::move(source)};
}

Relation order_by_contexts(const FiniteMonoid& m, const ElementSet& accepting) {
    const auto n = static_cast<std::size_t>(m.size());
    // right[u] = {y | u·y ∈ F}; below[u][v] = right[u] ⊆ right[v].
    Relation right(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t y = 0; y < n; ++y)
            if (accepting[static_cast<std::size_t>(m.multiply(static_cast<Element>(u), static_cast<Element>(y)))])
                right.set(static_cast<Element>(u), static_cast<Element>(y));
    std::vector<char> below(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            bool sub = true;
            for (std::size_t y = 0; y < n && sub; ++y)
                sub = !right.test(static_cast<Element>(u), static_cast<Element>(y)) ||
                      right.test(static_cast<Element>(v), static_cast<Element>(y));
            below[u * n + v] = sub;
        }
    Relation order(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x)
                ok = below[static_cast<std::size_t>(m.multiply(static_cast<Element>(x), static_cast<Element>(s))) * n +
                           static_cast<std::size_t>(m.multiply(static_cast<Element>(x), static_cast<Element>(t)))];
            if (ok) order.set(static_cast<Element>(s), static_cast<Element>(t));
        }
    return order;
}

std::string monoid_report(const Morphism& m) {
    std::ostringstream out;
    const int n = m.size();
    out << "elements: " << n << '\n';
    for (Element s = 0; s < n; ++s) out << "  [" << s << "] " << m.name(s) << '\n';
    out << "letters:";
    for (Letter a = 0; a < static_cast<Letter>(m.alphabet().size()); ++a)
        out << ' ' << m.alphabet().format({a}) << "->" << m.image(a);
    out << '\n';
    out << "table:\n";
    for (Element s = 0; s < n; ++s) {
        out << ' ';
        for (Element t = 0; t < n; ++t) out << ' ' << m.monoid().multiply(s, t);
        out << '\n';
    }
    if (m.has_order()) {
        out << "order:\n";
        for (Element s = 0; s < n; ++s)
            for (Element t = 0; t < n; ++t)
                if (s != t && m.leq(s, t)) out << "  " << m.name(s) << " <= " << m.name(t) << '\n';
    }
    out << "idempotents:";
    for (Element e : idempotents(m.monoid())) out << ' ' << m.name(e);
    out << '\n';
    out << "omega: " << m.monoid().omega() << '\n';
    out << "accepting:";
    for (Element s = 0; s < n; ++s)
        if (m.accepting()[static_cast<std::size_t>(s)]) out << ' ' << m.name(s);
    out << '\n';
    return out.str();
}

} // namespace polc
