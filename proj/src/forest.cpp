#include "polc/forest.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace polc {

namespace {

constexpr int inf = std::numeric_limits<int>::max() / 2;

struct Tables {
    std::size_t n;
    std::vector<Element> value;  // α(w[i, j))
    std::vector<int> best;       // optimal height of a forest for w[i, j)
    std::vector<int> split;      // > 0: binary split point; 0: leaf; < 0: idempotent, chain end at -split
    std::vector<int> chain;      // max child height of an e-chain covering w[i, j), e = value
    std::vector<int> chain_cut;  // last cut of that chain; 0 when it is a single segment

    std::size_t at(std::size_t i, std::size_t j) const { return i * (n + 1) + j; }
};

} // namespace

Forest build_forest(const Morphism& m, const Word& w) {
    const FiniteMonoid& mon = m.monoid();
    Forest f;
    f.word = w;
    const std::size_t n = w.size();
    if (n <= 1) {
        f.nodes.push_back({ForestNode::Kind::leaf, 0, n, n ? m.image(w[0]) : mon.neutral(), {}});
        return f;
    }

    Tables t{n, {}, {}, {}, {}, {}};
    const std::size_t cells = (n + 1) * (n + 1);
    t.value.assign(cells, mon.neutral());
    t.best.assign(cells, inf);
    t.split.assign(cells, 0);
    t.chain.assign(cells, inf);
    t.chain_cut.assign(cells, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Element x = mon.neutral();
        for (std::size_t j = i + 1; j <= n; ++j) {
            x = mon.multiply(x, m.image(w[j - 1]));
            t.value[t.at(i, j)] = x;
        }
    }

    for (std::size_t len = 1; len <= n; ++len)
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t j = i + len;
            const std::size_t ij = t.at(i, j);
            const Element e = t.value[ij];
            if (len == 1) {
                t.best[ij] = 0;
            } else {
                for (std::size_t k = i + 1; k < j; ++k) {
                    int h = 1 + std::max(t.best[t.at(i, k)], t.best[t.at(k, j)]);
                    if (h < t.best[ij]) {
                        t.best[ij] = h;
                        t.split[ij] = static_cast<int>(k);
                    }
                }
            }
            if (!mon.is_idempotent(e)) continue;
            // Chains of ≥ 2 segments, each mapping to e: the prefix w[i, k) is itself
            // an e-chain and the last segment is w[k, j).
            int g = inf, g_cut = 0;
            for (std::size_t k = i + 1; k < j; ++k) {
                if (t.value[t.at(i, k)] != e || t.value[t.at(k, j)] != e) continue;
                int h = std::max(t.chain[t.at(i, k)], t.best[t.at(k, j)]);
                if (h < g) {
                    g = h;
                    g_cut = static_cast<int>(k);
                }
            }
            if (g < inf && 1 + g < t.best[ij]) {
                t.best[ij] = 1 + g;
                t.split[ij] = -static_cast<int>(j);
            }
            if (t.best[ij] <= g) {
                t.chain[ij] = t.best[ij];
                t.chain_cut[ij] = 0;
            } else {
                t.chain[ij] = g;
                t.chain_cut[ij] = g_cut;
            }
            if (t.split[ij] < 0) t.split[ij] = -g_cut; // idempotent node: remember the last cut
        }

    std::function<std::size_t(std::size_t, std::size_t)> build = [&](std::size_t i, std::size_t j) -> std::size_t {
        const std::size_t ij = t.at(i, j);
        ForestNode node{ForestNode::Kind::leaf, i, j, t.value[ij], {}};
        if (j - i > 1) {
            if (t.split[ij] > 0) {
                node.kind = ForestNode::Kind::binary;
                const auto k = static_cast<std::size_t>(t.split[ij]);
                node.children = {build(i, k), build(k, j)};
            } else {
                node.kind = ForestNode::Kind::idempotent;
                std::vector<std::size_t> cuts{j};
                auto k = static_cast<std::size_t>(-t.split[ij]);
                while (k != 0) {
                    cuts.push_back(k);
                    k = static_cast<std::size_t>(t.chain_cut[t.at(i, k)]);
                }
                cuts.push_back(i);
                std::reverse(cuts.begin(), cuts.end());
                for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
                    node.children.push_back(build(cuts[c], cuts[c + 1]));
            }
        }
        f.nodes.push_back(std::move(node));
        return f.nodes.size() - 1;
    };
    f.root = build(0, n);
    return f;
}

int forest_height(const Forest& f) {
    std::function<int(std::size_t)> go = [&](std::size_t i) {
        int h = 0;
        for (std::size_t c : f.nodes.at(i).children) h = std::max(h, go(c) + 1);
        return h;
    };
    return f.nodes.empty() ? 0 : go(f.root);
}

ForestReport validate_forest(const Forest& f, const Morphism& m, const Word& w) {
    ForestReport report;
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.failures.push_back(std::move(msg));
    };
    if (f.nodes.empty() || f.root >= f.nodes.size()) {
        fail("forest has no root");
        return report;
    }
    if (f.word != w) fail("forest word differs from the input word");
    const FiniteMonoid& mon = m.monoid();
    auto slice = [&](const ForestNode& x) {
        return Word(f.word.begin() + static_cast<std::ptrdiff_t>(x.begin),
                    f.word.begin() + static_cast<std::ptrdiff_t>(x.end));
    };
    std::vector<int> visits(f.nodes.size(), 0);
    std::function<void(std::size_t)> check = [&](std::size_t i) {
        if (i >= f.nodes.size() || visits[i]++ > 0) {
            fail("node " + std::to_string(i) + " is missing or shared");
            return;
        }
        const ForestNode& x = f.nodes[i];
        if (x.begin > x.end || x.end > f.word.size()) {
            fail("node " + std::to_string(i) + " has an invalid range");
            return;
        }
        const std::string label = m.alphabet().format(slice(x));
        if (evaluate(m, slice(x)) != x.value) fail("node " + label + " carries the wrong value");
        switch (x.kind) {
        case ForestNode::Kind::leaf:
            if (x.end - x.begin > 1) fail("leaf " + label + " is longer than one letter");
            if (!x.children.empty()) fail("leaf " + label + " has children");
            return;
        case ForestNode::Kind::binary:
            if (x.children.size() != 2) fail("binary node " + label + " does not have two children");
            break;
        case ForestNode::Kind::idempotent:
            if (x.children.size() < 2) fail("idempotent node " + label + " has fewer than two children");
            break;
        }
        std::size_t pos = x.begin;
        for (std::size_t c : x.children) {
            if (c >= f.nodes.size()) {
                fail("node " + label + " has a dangling child");
                return;
            }
            if (f.nodes[c].begin != pos) fail("children of " + label + " do not concatenate to its label");
            pos = f.nodes[c].end;
        }
        if (pos != x.end) fail("children of " + label + " do not concatenate to its label");
        if (x.kind == ForestNode::Kind::idempotent) {
            const Element e = x.children.empty() ? x.value : evaluate(m, slice(f.nodes[x.children.front()]));
            if (!mon.is_idempotent(e)) fail("idempotent node " + label + " has a non-idempotent child value");
            for (std::size_t c : x.children)
                if (evaluate(m, slice(f.nodes[c])) != e)
                    fail("children of idempotent node " + label + " map to different elements");
        }
        Element folded = mon.neutral();
        for (std::size_t c : x.children) {
            check(c);
            folded = mon.multiply(folded, f.nodes[c].value);
        }
        if (!x.children.empty() && folded != x.value) fail("children of " + label + " do not fold to its value");
    };
    check(f.root);
    const ForestNode& root = f.nodes[f.root];
    if (root.begin != 0 || root.end != w.size()) fail("root label differs from the word");
    report.height = forest_height(f);
    return report;
}

std::string dump_forest(const Forest& f, const Morphism& m) {
    std::ostringstream out;
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int depth) {
        const ForestNode& x = f.nodes[i];
        const char* kind = x.kind == ForestNode::Kind::leaf     ? "leaf"
                           : x.kind == ForestNode::Kind::binary ? "binary"
                                                                : "idempotent";
        Word label(f.word.begin() + static_cast<std::ptrdiff_t>(x.begin),
                   f.word.begin() + static_cast<std::ptrdiff_t>(x.end));
        out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << kind << ' ' << m.alphabet().format(label)
            << " -> " << m.name(x.value) << '\n';
        for (std::size_t c : x.children) go(c, depth + 1);
    };
    if (!f.nodes.empty()) go(f.root, 0);
    return out.str();
}

} // namespace polc
