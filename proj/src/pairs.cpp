#include "polc/pairs.hpp"

#include "polc/errors.hpp"

#include <sstream>

namespace polc {

PairRelation compute_pairs(const Morphism& m, const BaseClass& oracle) {
    if (!(m.alphabet() == oracle.alphabet())) throw InputError("alphabet mismatch between morphism and class");
    return {PairRelation::Kind::plain, oracle.inseparable_preimages(m)};
}

bool preimage_in_class(const Morphism& m, const BaseClass& oracle, const ElementSet& subset) {
    return oracle.member(preimage_dfa(m, subset));
}

PairRelation compute_saturated(const Morphism& m, const BaseClass& oracle, SaturationMethod method,
                               const PairRelation* plain, std::size_t subset_cap) {
    const auto n = static_cast<std::size_t>(m.size());
    if (method == SaturationMethod::by_closure) {
        Relation r = plain ? plain->bits : compute_pairs(m, oracle).bits;
        r.close_reflexive_transitive();
        return {PairRelation::Kind::saturated, std::move(r)};
    }
    if (n > subset_cap)
        throw ResourceError("subset enumeration over " + std::to_string(n) + " elements exceeds the cap of " +
                            std::to_string(subset_cap) + "; use the closure method instead");
    // (s, t) survives iff every recognized class member containing s contains t.
    Relation r = Relation::full(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ElementSet f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = (mask >> i) & 1u;
        if (!preimage_in_class(m, oracle, f)) continue;
        for (std::size_t s = 0; s < n; ++s)
            if (f[s])
                for (std::size_t t = 0; t < n; ++t)
                    if (!f[t]) r.set(static_cast<Element>(s), static_cast<Element>(t), false);
    }
    return {PairRelation::Kind::saturated, std::move(r)};
}

RelationLawReport check_relation_laws(const PairRelation& r, const Morphism& m, const PairRelation* plain) {
    RelationLawReport report;
    const int n = m.size();
    const FiniteMonoid& mon = m.monoid();
    if (static_cast<int>(r.size()) != n) {
        report.failures.push_back("relation size differs from the monoid");
        report.reflexive = report.multiplicative = report.transitive = false;
        return report;
    }
    for (Element s = 0; s < n; ++s)
        if (!r.test(s, s)) {
            report.reflexive = false;
            report.failures.push_back("not reflexive at " + m.name(s));
            break;
        }

    std::vector<std::vector<Element>> related(static_cast<std::size_t>(n));
    for (Element s = 0; s < n; ++s)
        for (Element t = 0; t < n; ++t)
            if (r.test(s, t)) related[static_cast<std::size_t>(s)].push_back(t);
    for (Element s1 = 0; s1 < n && report.multiplicative; ++s1)
        for (Element t1 : related[static_cast<std::size_t>(s1)]) {
            for (Element s2 = 0; s2 < n && report.multiplicative; ++s2)
                for (Element t2 : related[static_cast<std::size_t>(s2)])
                    if (!r.test(mon.multiply(s1, s2), mon.multiply(t1, t2))) {
                        report.multiplicative = false;
                        report.failures.push_back("not multiplicative: (" + m.name(s1) + ", " + m.name(t1) +
                                                  ") and (" + m.name(s2) + ", " + m.name(t2) + ")");
                        break;
                    }
            if (!report.multiplicative) break;
        }

    if (r.kind == PairRelation::Kind::saturated) {
        if (!r.bits.is_transitive()) {
            report.transitive = false;
            report.failures.push_back("saturated relation is not transitive");
        }
        if (plain && !r.bits.contains(plain->bits)) {
            report.contains_plain = false;
            report.failures.push_back("saturated relation misses a plain pair");
        }
    }
    return report;
}

std::string pairs_report(const PairRelation& r, const Morphism& m) {
    std::ostringstream out;
    const int n = m.size();
    out << (r.kind == PairRelation::Kind::plain ? "pairs" : "saturated pairs") << " (" << r.bits.count()
        << " of " << static_cast<long long>(n) * n << ")\n";
    for (Element s = 0; s < n; ++s) {
        out << "  " << s << ' ';
        for (Element t = 0; t < n; ++t) out << (r.test(s, t) ? '1' : '.');
        out << "  " << m.name(s) << '\n';
    }
    return out.str();
}

} // namespace polc
