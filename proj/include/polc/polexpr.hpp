#pragma once

// Expressions built from base languages with union, concatenation and marked
// concatenation. Nodes are immutable and shared, so an expression is a DAG.

#include "polc/automata.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace polc {

inline constexpr std::size_t default_state_cap = 10000;

class PolExpr {
public:
    enum class Kind { base, union_, concat, marked };

    static PolExpr base(std::string name, Dfa language);
    /// Union of zero children denotes ∅.
    static PolExpr union_of(const Alphabet& alphabet, std::vector<PolExpr> children);
    static PolExpr concat(PolExpr left, PolExpr right);
    static PolExpr marked(PolExpr left, Letter a, PolExpr right);

    /// Same expression, printed as `label` by definitions_text().
    PolExpr with_label(std::string label) const;

    Kind kind() const noexcept { return node_->kind; }
    const Alphabet& alphabet() const noexcept { return node_->alphabet; }
    /// Base name for base nodes.
    const std::string& name() const noexcept { return node_->name; }
    const std::string& label() const noexcept { return node_->label; }
    const Dfa& language() const { return *node_->language; }
    const std::vector<PolExpr>& children() const noexcept { return node_->children; }
    Letter letter() const noexcept { return node_->letter; }
    const void* identity() const noexcept { return node_.get(); }

private:
    struct Node {
        Kind kind;
        Alphabet alphabet;
        std::string name;
        std::string label;
        std::shared_ptr<const Dfa> language;
        std::vector<PolExpr> children;
        Letter letter = 0;
    };
    explicit PolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Minimal DFA of the denotation. Throws ResourceError when an intermediate
/// automaton exceeds `state_cap` states.
Dfa expr_to_dfa(const PolExpr& expr, std::size_t state_cap = default_state_cap);

/// Inline parenthesized form: union(...), cat(x, y), mark(x, 'a', y), base(K).
std::string to_text(const PolExpr& expr);

/// One `label := body` line per labeled node (dependencies first); labeled
/// subexpressions are referenced by label inside bodies.
std::string definitions_text(const PolExpr& expr);

/// Distinct base nodes reachable from the expression, in first-visit order.
std::vector<PolExpr> base_nodes(const PolExpr& expr);

/// Largest number of (marked or plain) concatenation boundaries in any product
/// of the expression once it is distributed into a union of products.
std::uint64_t max_product_boundaries(const PolExpr& expr);

} // namespace polc
