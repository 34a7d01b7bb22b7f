#pragma once

// Factorization forests of words with respect to a morphism.

#include "polc/algebra.hpp"

#include <string>
#include <vector>

namespace polc {

struct ForestNode {
    enum class Kind { leaf, binary, idempotent };
    Kind kind = Kind::leaf;
    std::size_t begin = 0; // label is word[begin, end)
    std::size_t end = 0;
    Element value = 0;     // α(label)
    std::vector<std::size_t> children;
};

struct Forest {
    Word word;
    std::vector<ForestNode> nodes;
    std::size_t root = 0;
};

/// Minimum-height forest for w, computed by dynamic programming over factors
/// (cubic in |w|). Its height never exceeds 3|M| − 1.
Forest build_forest(const Morphism& m, const Word& w);

/// Inner nodes on the longest root-to-leaf branch.
int forest_height(const Forest& f);

struct ForestReport {
    bool valid = true;
    int height = 0;
    std::vector<std::string> failures;
};

ForestReport validate_forest(const Forest& f, const Morphism& m, const Word& w);

/// Indented tree, one node per line with its label and α-value.
std::string dump_forest(const Forest& f, const Morphism& m);

} // namespace polc
