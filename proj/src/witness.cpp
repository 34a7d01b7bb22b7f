#include "polc/witness.hpp"

#include "polc/errors.hpp"

#include <algorithm>
#include <functional>

namespace polc {

namespace {

std::string element_tag(const Morphism& m, Element s) {
    return s == m.monoid().neutral() ? "1" : m.name(s);
}

void check_cap(const Dfa& d, std::size_t cap) {
    if (static_cast<std::size_t>(d.size()) > cap)
        throw ResourceError("witness automaton has " + std::to_string(d.size()) + " states, above the cap of " +
                            std::to_string(cap));
}

} // namespace

NamedDfa compute_Ke(Element e, const Morphism& m, const BaseClass& oracle, const PairRelation& pairs) {
    if (!m.monoid().is_idempotent(e)) throw InputError("K_e requires an idempotent element");
    const Dfa pe = preimage_dfa(m, e);
    Dfa k = Dfa::universal(m.alphabet());
    for (Element t = 0; t < m.size(); ++t) {
        if (pairs.test(e, t)) continue;
        auto g = oracle.separate(pe, preimage_dfa(m, t));
        if (!g)
            throw TheoremViolation("class " + oracle.name() + " failed to separate a non-pair (" + m.name(e) +
                                   ", " + m.name(t) + ")");
        k = intersection_of(k, *g);
    }
    return {"K_" + element_tag(m, e), minimize(k)};
}

SynthesisResult synthesize(const SyntacticData& sd, const BaseClass& oracle, const PairRelation& pairs,
                           std::optional<int> max_h, std::size_t state_cap) {
    const Morphism& m = sd.morphism;
    const FiniteMonoid& mon = m.monoid();
    const int n = m.size();
    const auto un = static_cast<std::size_t>(n);
    const Alphabet& alphabet = m.alphabet();
    const Element one = mon.neutral();

    SynthesisResult result{{}, {}, {}, PolExpr::union_of(alphabet, {}), Dfa::empty(alphabet), 0, 3 * n - 1,
                           false, {}};
    const int limit = max_h ? std::min(result.bound, std::max(0, *max_h)) : result.bound;

    std::vector<std::optional<PolExpr>> k_expr(un);
    std::vector<std::optional<Dfa>> k_dfa(un);
    auto k_of = [&](Element e) {
        auto i = static_cast<std::size_t>(e);
        if (!k_expr[i]) {
            NamedDfa k = compute_Ke(e, m, oracle, pairs);
            check_cap(k.language, state_cap);
            k_expr[i] = PolExpr::base(k.name, k.language);
            k_dfa[i] = k.language;
            result.bases.push_back(std::move(k));
        }
        return i;
    };

    auto label = [&](Element s, int h) { return "H_" + element_tag(m, s) + "_" + std::to_string(h); };

    // Level 0.
    std::vector<PolExpr> exprs;
    std::vector<Dfa> dfas;
    {
        const auto k1 = k_of(one);
        for (Element s = 0; s < n; ++s) {
            std::vector<PolExpr> parts;
            Dfa lang = Dfa::empty(alphabet);
            if (s == one) {
                parts.push_back(*k_expr[k1]);
                lang = *k_dfa[k1];
            }
            for (Letter b = 0; b < static_cast<Letter>(alphabet.size()); ++b) {
                if (m.image(b) != s) continue;
                parts.push_back(PolExpr::marked(*k_expr[k1], b, *k_expr[k1]));
                lang = union_of(lang, marked_concatenate(*k_dfa[k1], b, *k_dfa[k1]));
                check_cap(lang, state_cap);
            }
            exprs.push_back(PolExpr::union_of(alphabet, std::move(parts)).with_label(label(s, 0)));
            dfas.push_back(std::move(lang));
        }
    }

    for (int h = 0;; ++h) {
        if (h > 0) {
            std::vector<PolExpr> next_exprs;
            std::vector<Dfa> next_dfas;
            bool changed = false;
            for (Element s = 0; s < n; ++s) {
                const auto si = static_cast<std::size_t>(s);
                std::vector<PolExpr> parts{exprs[si]};
                Dfa lang = dfas[si];
                for (Element t1 = 0; t1 < n; ++t1) {
                    const auto i1 = static_cast<std::size_t>(t1);
                    if (is_empty(dfas[i1])) continue;
                    for (Element t2 = 0; t2 < n; ++t2) {
                        const auto i2 = static_cast<std::size_t>(t2);
                        if (mon.multiply(t1, t2) != s || is_empty(dfas[i2])) continue;
                        Dfa c = concatenate(dfas[i1], dfas[i2]);
                        check_cap(c, state_cap);
                        if (includes(lang, c)) continue;
                        parts.push_back(PolExpr::concat(exprs[i1], exprs[i2]));
                        lang = union_of(lang, c);
                        check_cap(lang, state_cap);
                    }
                }
                if (mon.is_idempotent(s) && !is_empty(dfas[si])) {
                    const auto ki = k_of(s);
                    Dfa c = concatenate(concatenate(dfas[si], *k_dfa[ki]), dfas[si]);
                    check_cap(c, state_cap);
                    if (!includes(lang, c)) {
                        parts.push_back(PolExpr::concat(PolExpr::concat(exprs[si], *k_expr[ki]), exprs[si]));
                        lang = union_of(lang, c);
                        check_cap(lang, state_cap);
                    }
                }
                if (parts.size() == 1) {
                    next_exprs.push_back(exprs[si]);
                } else {
                    changed = true;
                    next_exprs.push_back(PolExpr::union_of(alphabet, std::move(parts)).with_label(label(s, h)));
                }
                next_dfas.push_back(std::move(lang));
            }
            exprs = std::move(next_exprs);
            dfas = std::move(next_dfas);
            if (!changed && !result.stats.empty() && !result.stats.back().equivalent) {
                result.level = h;
                throw TheoremViolation("witness levels reached a fixpoint at level " + std::to_string(h) +
                                       " without denoting the language");
            }
        }

        LevelStats st;
        st.level = h;
        Dfa u = Dfa::empty(alphabet);
        std::vector<PolExpr> accepted;
        for (Element s = 0; s < n; ++s) {
            const auto si = static_cast<std::size_t>(s);
            st.largest_automaton = std::max(st.largest_automaton, dfas[si].size());
            if (!m.accepting()[si]) continue;
            accepted.push_back(exprs[si]);
            u = union_of(u, dfas[si]);
        }
        st.union_states = u.size();
        st.sound = includes(sd.source, u);
        st.equivalent = st.sound && includes(u, sd.source);
        result.stats.push_back(st);

        if (st.equivalent || h >= limit) {
            result.level = h;
            result.elements = exprs;
            result.element_dfas = dfas;
            result.expression = PolExpr::union_of(alphabet, std::move(accepted));
            result.language = std::move(u);
            result.verified = st.equivalent;
            if (!st.equivalent && h >= result.bound)
                throw TheoremViolation("witness did not denote the language at the level bound " +
                                       std::to_string(result.bound));
            return result;
        }
    }
}

bool sound_for(const Morphism& m, Element s, const Dfa& h, std::size_t max_length) {
    const FiniteMonoid& mon = m.monoid();
    const auto k = static_cast<Letter>(m.alphabet().size());
    std::function<bool(int, Element, std::size_t)> go = [&](int q, Element x, std::size_t depth) {
        if (h.is_final(q) && !m.leq(s, x)) return false;
        if (depth == max_length) return true;
        for (Letter a = 0; a < k; ++a)
            if (!go(h.next(q, a), mon.multiply(x, m.image(a)), depth + 1)) return false;
        return true;
    };
    return go(h.initial(), mon.neutral(), 0);
}

bool verify_witness(const SyntacticData& sd, const SynthesisResult& r) {
    if (!equivalent(expr_to_dfa(r.expression), sd.source)) return false;
    for (std::size_t s = 0; s < r.element_dfas.size(); ++s)
        if (!sound_for(sd.morphism, static_cast<Element>(s), r.element_dfas[s])) return false;
    return true;
}

} // namespace polc
