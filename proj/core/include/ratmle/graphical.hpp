#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ratmle/contingency.hpp"
#include "ratmle/staged_tree.hpp"

namespace ratmle {

struct NotChordal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CyclicGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UndirectedGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct CliqueDecomposition {
    std::vector<std::size_t> peo;                      // perfect elimination ordering
    std::vector<std::vector<std::size_t>> cliques;     // maximal, sorted members
    std::vector<std::vector<std::size_t>> separators;  // junction-tree separators
};

// Maximum-cardinality search; throws NotChordal when no perfect
// elimination ordering exists.
CliqueDecomposition chordal_decompose(const UndirectedGraph& g);

// Closed-form MLE of the decomposable model: the product of clique
// marginals over separator marginals, normalized by the grand total once
// per connected component. Result has the dims of u and sums to 1.
ContingencyTable decomposable_mle(const UndirectedGraph& g, const ContingencyTable& u);

struct DAGModel {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> parents;  // per node, any order
    std::vector<std::size_t> states;                // per node, >= 2
};

// Kahn's algorithm with lowest-index tie-break; throws CyclicGraph.
std::vector<std::size_t> topological_order(const DAGModel& d);

// p-hat_I = prod_j u_{I, pa(j) + {j}} / u_{I, pa(j)}, with the empty
// marginal read as the grand total.
ContingencyTable bayes_net_mle(const DAGModel& d, const ContingencyTable& u);

// Staged tree with one level per variable in topological order; stages at
// level j are determined by the parent configuration.
StagedTree from_bayesian_network(const DAGModel& d);

}  // namespace ratmle
