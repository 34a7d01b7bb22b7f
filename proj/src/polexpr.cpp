#include "polc/polexpr.hpp"

#include "polc/errors.hpp"
#include "utf8.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace polc {

PolExpr PolExpr::base(std::string name, Dfa language) {
    Alphabet alphabet = language.alphabet();
    return PolExpr(std::make_shared<const Node>(Node{Kind::base, std::move(alphabet), std::move(name), {},
                                                     std::make_shared<const Dfa>(std::move(language)), {}, 0}));
}

PolExpr PolExpr::union_of(const Alphabet& alphabet, std::vector<PolExpr> children) {
    for (const auto& c : children)
        if (!(c.alphabet() == alphabet)) throw InputError("alphabet mismatch in union");
    return PolExpr(std::make_shared<const Node>(Node{Kind::union_, alphabet, {}, {}, nullptr, std::move(children), 0}));
}

PolExpr PolExpr::concat(PolExpr left, PolExpr right) {
    if (!(left.alphabet() == right.alphabet())) throw InputError("alphabet mismatch in concatenation");
    Alphabet alphabet = left.alphabet();
    return PolExpr(std::make_shared<const Node>(
        Node{Kind::concat, std::move(alphabet), {}, {}, nullptr, {std::move(left), std::move(right)}, 0}));
}

PolExpr PolExpr::marked(PolExpr left, Letter a, PolExpr right) {
    if (!(left.alphabet() == right.alphabet())) throw InputError("alphabet mismatch in marked concatenation");
    if (a < 0 || static_cast<std::size_t>(a) >= left.alphabet().size())
        throw InputError("marker letter out of range");
    Alphabet alphabet = left.alphabet();
    return PolExpr(std::make_shared<const Node>(
        Node{Kind::marked, std::move(alphabet), {}, {}, nullptr, {std::move(left), std::move(right)}, a}));
}

PolExpr PolExpr::with_label(std::string label) const {
    Node copy = *node_;
    copy.label = std::move(label);
    return PolExpr(std::make_shared<const Node>(std::move(copy)));
}

namespace {

void check_cap(const Dfa& d, std::size_t cap) {
    if (static_cast<std::size_t>(d.size()) > cap)
        throw ResourceError("intermediate automaton has " + std::to_string(d.size()) +
                            " states, above the cap of " + std::to_string(cap));
}

} // namespace

Dfa expr_to_dfa(const PolExpr& expr, std::size_t state_cap) {
    std::unordered_map<const void*, Dfa> memo;
    std::function<const Dfa&(const PolExpr&)> go = [&](const PolExpr& e) -> const Dfa& {
        if (auto it = memo.find(e.identity()); it != memo.end()) return it->second;
        Dfa result = [&] {
            switch (e.kind()) {
            case PolExpr::Kind::base:
                return minimize(e.language());
            case PolExpr::Kind::union_: {
                Dfa acc = Dfa::empty(e.alphabet());
                for (const auto& c : e.children()) {
                    acc = union_of(acc, go(c));
                    check_cap(acc, state_cap);
                }
                return acc;
            }
            case PolExpr::Kind::concat:
                return concatenate(go(e.children()[0]), go(e.children()[1]));
            case PolExpr::Kind::marked:
                return marked_concatenate(go(e.children()[0]), e.letter(), go(e.children()[1]));
            }
            throw InputError("unknown expression node");
        }();
        check_cap(result, state_cap);
        return memo.emplace(e.identity(), std::move(result)).first->second;
    };
    return go(expr);
}

namespace {

void write_inline(std::ostream& out, const PolExpr& e, bool stop_at_labels, bool is_root) {
    if (stop_at_labels && !is_root && !e.label().empty()) {
        out << e.label();
        return;
    }
    switch (e.kind()) {
    case PolExpr::Kind::base:
        out << "base(" << e.name() << ')';
        return;
    case PolExpr::Kind::union_:
        out << "union(";
        for (std::size_t i = 0; i < e.children().size(); ++i) {
            if (i) out << ", ";
            write_inline(out, e.children()[i], stop_at_labels, false);
        }
        out << ')';
        return;
    case PolExpr::Kind::concat:
        out << "cat(";
        write_inline(out, e.children()[0], stop_at_labels, false);
        out << ", ";
        write_inline(out, e.children()[1], stop_at_labels, false);
        out << ')';
        return;
    case PolExpr::Kind::marked:
        out << "mark(";
        write_inline(out, e.children()[0], stop_at_labels, false);
        out << ", '" << detail::encode_utf8(e.alphabet().symbol(e.letter())) << "', ";
        write_inline(out, e.children()[1], stop_at_labels, false);
        out << ')';
        return;
    }
}

} // namespace

std::string to_text(const PolExpr& expr) {
    std::ostringstream out;
    write_inline(out, expr, false, true);
    return out.str();
}

std::string definitions_text(const PolExpr& expr) {
    std::ostringstream out;
    std::unordered_set<const void*> done;
    std::function<void(const PolExpr&)> visit = [&](const PolExpr& e) {
        if (!done.insert(e.identity()).second) return;
        for (const auto& c : e.children()) visit(c);
        if (!e.label().empty()) {
            out << e.label() << " := ";
            write_inline(out, e, true, true);
            out << '\n';
        }
    };
    visit(expr);
    if (expr.label().empty()) {
        write_inline(out, expr, true, true);
        out << '\n';
    }
    return out.str();
}

std::vector<PolExpr> base_nodes(const PolExpr& expr) {
    std::vector<PolExpr> out;
    std::unordered_set<const void*> seen;
    std::unordered_set<std::string> names;
    std::function<void(const PolExpr&)> visit = [&](const PolExpr& e) {
        if (!seen.insert(e.identity()).second) return;
        if (e.kind() == PolExpr::Kind::base) {
            if (names.insert(e.name()).second) out.push_back(e);
            return;
        }
        for (const auto& c : e.children()) visit(c);
    };
    visit(expr);
    return out;
}

std::uint64_t max_product_boundaries(const PolExpr& expr) {
    std::unordered_map<const void*, std::uint64_t> memo;
    constexpr std::uint64_t saturated = std::uint64_t{1} << 40;
    std::function<std::uint64_t(const PolExpr&)> go = [&](const PolExpr& e) -> std::uint64_t {
        if (auto it = memo.find(e.identity()); it != memo.end()) return it->second;
        std::uint64_t r = 0;
        switch (e.kind()) {
        case PolExpr::Kind::base:
            r = 0;
            break;
        case PolExpr::Kind::union_:
            for (const auto& c : e.children()) r = std::max(r, go(c));
            break;
        case PolExpr::Kind::concat:
        case PolExpr::Kind::marked:
            r = std::min(saturated, go(e.children()[0]) + go(e.children()[1]) + 1);
            break;
        }
        memo.emplace(e.identity(), r);
        return r;
    };
    return go(expr);
}

} // namespace polc
