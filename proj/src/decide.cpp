#include "polc/decide.hpp"

#include "polc/errors.hpp"

#include <functional>

namespace polc {

std::string level_name(Level level) {
    switch (level) {
    case Level::pol: return "pol";
    case Level::copol: return "copol";
    case Level::upol: return "upol";
    }
    return "?";
}

Level parse_level(const std::string& text) {
    if (text == "pol") return Level::pol;
    if (text == "copol") return Level::copol;
    if (text == "upol") return Level::upol;
    throw InputError("unknown level '" + text + "' (expected pol, copol or upol)");
}

namespace {

using Holds = std::function<bool(Element lhs, Element rhs)>;

// First violation in (s, t) id order, which is shortlex order of representatives.
std::optional<Violation> general_form(const Morphism& m, const Relation& pairs, const Holds& holds) {
    const FiniteMonoid& mon = m.monoid();
    for (Element s = 0; s < m.size(); ++s) {
        Element sw = mon.omega_power(s);
        Element lhs = mon.multiply(sw, s);
        for (Element t = 0; t < m.size(); ++t) {
            if (!pairs.test(s, t)) continue;
            Element rhs = mon.multiply(sw, t, sw);
            if (!holds(lhs, rhs))
                return Violation{s, t, lhs, rhs, m.representative(s), m.representative(t), false};
        }
    }
    return std::nullopt;
}

std::optional<Violation> idempotent_form(const Morphism& m, const Relation& pairs, const Holds& holds) {
    const FiniteMonoid& mon = m.monoid();
    for (Element e = 0; e < m.size(); ++e) {
        if (!mon.is_idempotent(e)) continue;
        for (Element t = 0; t < m.size(); ++t) {
            if (!pairs.test(e, t)) continue;
            Element rhs = mon.multiply(e, t, e);
            if (!holds(e, rhs)) return Violation{e, t, e, rhs, m.representative(e), m.representative(t), true};
        }
    }
    return std::nullopt;
}

void require_matching(const SyntacticData& sd, const PairRelation& r) {
    if (static_cast<int>(r.size()) != sd.morphism.size())
        throw InputError("pair relation does not belong to this monoid");
}

Verdict inequality(Level level, const SyntacticData& sd, const PairRelation& pairs, const Holds& holds) {
    require_matching(sd, pairs);
    auto general = general_form(sd.morphism, pairs.bits, holds);
    auto idem = idempotent_form(sd.morphism, pairs.bits, holds);
    if (general.has_value() != idem.has_value())
        throw TheoremViolation(level_name(level) + ": general and idempotent equation forms disagree");
    Verdict v;
    v.level = level;
    v.answer = !idem.has_value();
    v.violation = idem;
    v.equation = level == Level::pol ? "e <= ete" : "ete <= e";
    return v;
}

} // namespace

Verdict decide_pol(const SyntacticData& sd, const PairRelation& pairs) {
    const Morphism& m = sd.morphism;
    return inequality(Level::pol, sd, pairs, [&](Element l, Element r) { return m.leq(l, r); });
}

Verdict decide_copol(const SyntacticData& sd, const PairRelation& pairs) {
    const Morphism& m = sd.morphism;
    return inequality(Level::copol, sd, pairs, [&](Element l, Element r) { return m.leq(r, l); });
}

Verdict decide_upol(const SyntacticData& sd, const PairRelation& plain, const PairRelation* saturated) {
    require_matching(sd, plain);
    const Holds equal = [](Element l, Element r) { return l == r; };
    auto on_plain = general_form(sd.morphism, plain.bits, equal);
    Verdict v;
    v.level = Level::upol;
    v.violation = on_plain;
    v.equation = "s^(w+1) = s^w t s^w over pairs";
    if (saturated) {
        require_matching(sd, *saturated);
        auto on_saturated = general_form(sd.morphism, saturated->bits, equal);
        if (on_plain.has_value() != on_saturated.has_value())
            throw TheoremViolation("upol: plain and saturated equation forms disagree");
        v.violation = on_saturated;
        v.equation = "s^(w+1) = s^w t s^w over saturated pairs";
    }
    v.answer = !v.violation.has_value();
    return v;
}

std::optional<std::pair<Element, Element>> first_violation(const FiniteMonoid& m, const Relation& order,
                                                           const Relation& pairs, EquationForm form,
                                                           bool reversed) {
    for (Element s = 0; s < m.size(); ++s) {
        if (form == EquationForm::idempotent && !m.is_idempotent(s)) continue;
        const Element sw = form == EquationForm::general ? m.omega_power(s) : s;
        const Element lhs = form == EquationForm::general ? m.multiply(sw, s) : s;
        for (Element t = 0; t < m.size(); ++t) {
            if (!pairs.test(s, t)) continue;
            const Element rhs = m.multiply(sw, t, sw);
            if (!(reversed ? order.test(rhs, lhs) : order.test(lhs, rhs))) return std::pair{s, t};
        }
    }
    return std::nullopt;
}

std::string describe(const Verdict& v, const Morphism& m) {
    if (!v.violation) return "none";
    const Violation& x = *v.violation;
    const std::string s = m.alphabet().format(x.s_word), t = m.alphabet().format(x.t_word);
    const std::string lhs = m.name(x.lhs), rhs = m.name(x.rhs);
    if (x.idempotent_form) {
        const char* rel = v.level == Level::pol ? "e <= ete" : "ete <= e";
        return "e = " + s + ", t = " + t + ": " + rel + " fails (e = " + lhs + ", ete = " + rhs + ")";
    }
    const char* rel = v.level == Level::upol ? "s^(w+1) = s^w t s^w"
                      : v.level == Level::pol ? "s^(w+1) <= s^w t s^w"
                                              : "s^w t s^w <= s^(w+1)";
    return "s = " + s + ", t = " + t + ": " + rel + " fails (s^(w+1) = " + lhs + ", s^w t s^w = " + rhs + ")";
}

} // namespace polc
