#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratmle/horn.hpp"
#include "ratmle/rational.hpp"

namespace ratmle {

struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-labeled rooted tree as supplied by the user / JSON layer.
struct StagedTree {
    struct Edge {
        std::string from, to, label;
    };
    std::vector<std::string> nodes;
    std::vector<Edge> edges;
};

// Compiled form: stages indexed in first-appearance (edge insertion)
// order, florets deduplicated in first-appearance order, root-to-leaf
// paths enumerated depth-first following edge insertion order.
struct TreeStructure {
    std::vector<std::string> stage_labels;            // index i in I
    std::vector<std::vector<std::size_t>> florets;    // sorted stage indices
    std::vector<std::size_t> floret_of_stage;         // I -> F
    std::vector<std::vector<long>> mu;                // |I| x |J|
    std::vector<std::string> leaf_names;              // column j -> leaf node
    // Topology for the aggregated estimator: per node, outgoing edges as
    // (stage index, child node index); leaves carry their column index.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> children;
    std::vector<long> leaf_column;  // -1 for internal nodes
    std::size_t root = 0;

    std::size_t n_stages() const { return stage_labels.size(); }
    std::size_t n_florets() const { return florets.size(); }
    std::size_t n_paths() const { return leaf_names.size(); }
};

// Invariant violations in human-readable form; empty means valid.
std::vector<std::string> tree_validate(const StagedTree& t);

// Throws std::invalid_argument carrying the first violation.
TreeStructure compile_tree(const StagedTree& t);

// p_j = prod_i s_i^{mu_ij}; s must lie in the open parameter space
// (entries in (0,1), each floret summing to exactly 1).
std::vector<Rational> tree_parametrize(const TreeStructure& ts, const std::vector<Rational>& s);

struct TreeMLE {
    std::vector<Rational> s;  // per stage
    std::vector<Rational> p;  // per leaf column
};

// Closed-form MLE from leaf counts.
TreeMLE tree_mle(const TreeStructure& ts, const std::vector<Rational>& u);

// Same estimate computed from aggregated node counts (empirical
// transition frequencies); agrees exactly with tree_mle.
TreeMLE tree_mle_aggregated(const TreeStructure& ts, const std::vector<Rational>& u);

// Rows indexed by stages then florets; lambda_j = (-1)^{sum_f h_fj}.
HornPair tree_horn(const TreeStructure& ts);

// Relabels the edges of floret f_prime (given by its labels, aligned
// positionally with f's labels as the bijection) to merge it with f.
StagedTree identify_florets(const StagedTree& t, const std::vector<std::string>& f,
                            const std::vector<std::string>& f_prime);

// Statistical equivalence via equality of reduced Horn pairs under a
// searched leaf bijection.
bool tree_equivalent(const StagedTree& t1, const StagedTree& t2);

}  // namespace ratmle
