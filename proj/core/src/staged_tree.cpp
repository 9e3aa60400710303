#include "ratmle/staged_tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ratmle {

namespace {

struct Topology {
    std::vector<std::string> violations;
    std::map<std::string, std::size_t> node_index;
    std::vector<std::vector<std::size_t>> out_edges;  // node -> edge indices
    std::vector<int> in_degree;
    std::size_t root = 0;
    bool usable = false;
};

Topology analyze(const StagedTree& t) {
    Topology topo;
    for (const auto& name : t.nodes) {
        if (!topo.node_index.emplace(name, topo.node_index.size()).second)
            topo.violations.push_back("duplicate node name: " + name);
    }
    std::size_t nn = t.nodes.size();
    topo.out_edges.resize(nn);
    topo.in_degree.assign(nn, 0);
    if (nn == 0) {
        topo.violations.push_back("tree has no nodes");
        return topo;
    }
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        auto fi = topo.node_index.find(t.edges[e].from);
        auto ti = topo.node_index.find(t.edges[e].to);
        if (fi == topo.node_index.end() || ti == topo.node_index.end()) {
            topo.violations.push_back("edge references unknown node: " + t.edges[e].from + " -> " +
                                      t.edges[e].to);
            continue;
        }
        topo.out_edges[fi->second].push_back(e);
        ++topo.in_degree[ti->second];
    }
    if (!topo.violations.empty()) return topo;

    std::size_t roots = 0;
    for (std::size_t v = 0; v < nn; ++v) {
        if (topo.in_degree[v] == 0) {
            topo.root = v;
            ++roots;
        } else if (topo.in_degree[v] > 1) {
            topo.violations.push_back("node has multiple parents: " + t.nodes[v]);
        }
    }
    if (roots != 1) topo.violations.push_back("tree must have exactly one root");
    if (!topo.violations.empty()) return topo;

    // Reachability (rules out disconnected parts and cycles).
    std::vector<bool> seen(nn, false);
    std::vector<std::size_t> stack = {topo.root};
    seen[topo.root] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e : topo.out_edges[v]) {
            std::size_t w = topo.node_index[t.edges[e].to];
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    if (count != nn) {
        topo.violations.push_back("tree is not connected");
        return topo;
    }
    topo.usable = true;
    return topo;
}

}  // namespace

std::vector<std::string> tree_validate(const StagedTree& t) {
    Topology topo = analyze(t);
    if (!topo.usable) return topo.violations;
    std::vector<std::string> v;
    std::size_t nn = t.nodes.size();

    // Each non-leaf needs >= 2 outgoing edges with distinct labels.
    std::vector<std::set<std::string>> floret_sets(nn);
    for (std::size_t node = 0; node < nn; ++node) {
        const auto& out = topo.out_edges[node];
        if (out.empty()) continue;
        if (out.size() < 2)
            v.push_back("non-leaf node with a single outgoing edge: " + t.nodes[node]);
        for (std::size_t e : out)
            if (!floret_sets[node].insert(t.edges[e].label).second)
                v.push_back("repeated label in the floret at node " + t.nodes[node] + ": " +
                            t.edges[e].label);
    }
    // Any two florets must be equal or disjoint.
    for (std::size_t a = 0; a < nn; ++a) {
        if (floret_sets[a].empty()) continue;
        for (std::size_t b = a + 1; b < nn; ++b) {
            if (floret_sets[b].empty() || floret_sets[a] == floret_sets[b]) continue;
            std::vector<std::string> common;
            std::set_intersection(floret_sets[a].begin(), floret_sets[a].end(),
                                  floret_sets[b].begin(), floret_sets[b].end(),
                                  std::back_inserter(common));
            if (!common.empty())
                v.push_back("overlapping unequal florets at nodes " + t.nodes[a] + " and " +
                            t.nodes[b] + " (shared label " + common[0] + ")");
        }
    }
    return v;
}

TreeStructure compile_tree(const StagedTree& t) {
    auto violations = tree_validate(t);
    if (!violations.empty()) throw std::invalid_argument(violations.front());
    Topology topo = analyze(t);
    std::size_t nn = t.nodes.size();

    TreeStructure ts;
    ts.root = topo.root;
    ts.children.resize(nn);
    ts.leaf_column.assign(nn, -1);

    std::map<std::string, std::size_t> stage_index;
    for (const auto& e : t.edges)
        if (stage_index.emplace(e.label, stage_index.size()).second)
            ts.stage_labels.push_back(e.label);

    // Florets in first-appearance order, keyed by sorted stage content.
    std::map<std::vector<std::size_t>, std::size_t> floret_index;
    ts.floret_of_stage.assign(ts.stage_labels.size(), 0);
    for (std::size_t node = 0; node < nn; ++node) {
        const auto& out = topo.out_edges[node];
        if (out.empty()) continue;
        std::vector<std::size_t> content;
        for (std::size_t e : out) content.push_back(stage_index[t.edges[e].label]);
        std::sort(content.begin(), content.end());
        auto [it, fresh] = floret_index.emplace(content, floret_index.size());
        if (fresh) ts.florets.push_back(content);
        for (std::size_t s : content) ts.floret_of_stage[s] = it->second;
        for (std::size_t e : out)
            ts.children[node].emplace_back(stage_index[t.edges[e].label],
                                           topo.node_index[t.edges[e].to]);
    }

    // Depth-first path enumeration following edge insertion order.
    std::vector<long> counts(ts.stage_labels.size(), 0);
    auto dfs = [&](auto&& self, std::size_t node) -> void {
        if (ts.children[node].empty()) {
            ts.leaf_column[node] = static_cast<long>(ts.leaf_names.size());
            ts.leaf_names.push_back(t.nodes[node]);
            for (std::size_t i = 0; i < counts.size(); ++i) ts.mu[i].push_back(counts[i]);
            return;
        }
        for (const auto& [stage, child] : ts.children[node]) {
            ++counts[stage];
            self(self, child);
            --counts[stage];
        }
    };
    ts.mu.assign(ts.stage_labels.size(), {});
    dfs(dfs, topo.root);
    return ts;
}

std::vector<Rational> tree_parametrize(const TreeStructure& ts, const std::vector<Rational>& s) {
    if (s.size() != ts.n_stages()) throw InvalidParameter("parameter length mismatch");
    for (const auto& x : s)
        if (x <= 0 || x >= 1) throw InvalidParameter("parameters must lie strictly between 0 and 1");
    for (const auto& f : ts.florets) {
        Rational sum(0);
        for (std::size_t i : f) sum += s[i];
        if (sum != 1) throw InvalidParameter("floret parameters do not sum to 1");
    }
    std::vector<Rational> p(ts.n_paths(), Rational(1));
    for (std::size_t j = 0; j < ts.n_paths(); ++j)
        for (std::size_t i = 0; i < ts.n_stages(); ++i)
            if (ts.mu[i][j] > 0) p[j] *= pow_rational(s[i], ts.mu[i][j]);
    return p;
}

static std::vector<Rational> mle_probabilities(const TreeStructure& ts,
                                               const std::vector<Rational>& s) {
    std::vector<Rational> p(ts.n_paths(), Rational(1));
    for (std::size_t j = 0; j < ts.n_paths(); ++j)
        for (std::size_t i = 0; i < ts.n_stages(); ++i)
            if (ts.mu[i][j] > 0) p[j] *= pow_rational(s[i], ts.mu[i][j]);
    return p;
}

TreeMLE tree_mle(const TreeStructure& ts, const std::vector<Rational>& u) {
    if (u.size() != ts.n_paths()) throw std::invalid_argument("count vector length mismatch");
    for (const auto& x : u)
        if (x < 0) throw std::invalid_argument("counts must be nonnegative");
    std::vector<Rational> num(ts.n_stages(), Rational(0));
    for (std::size_t i = 0; i < ts.n_stages(); ++i)
        for (std::size_t j = 0; j < ts.n_paths(); ++j) num[i] += Rational(ts.mu[i][j]) * u[j];
    std::vector<Rational> den(ts.n_florets(), Rational(0));
    for (std::size_t i = 0; i < ts.n_stages(); ++i) den[ts.floret_of_stage[i]] += num[i];
    TreeMLE out;
    out.s.resize(ts.n_stages());
    for (std::size_t i = 0; i < ts.n_stages(); ++i) {
        const Rational& d = den[ts.floret_of_stage[i]];
        if (d == 0) throw ZeroDenominator("floret aggregate count vanishes");
        out.s[i] = num[i] / d;
    }
    out.p = mle_probabilities(ts, out.s);
    return out;
}

TreeMLE tree_mle_aggregated(const TreeStructure& ts, const std::vector<Rational>& u) {
    if (u.size() != ts.n_paths()) throw std::invalid_argument("count vector length mismatch");
    std::size_t nn = ts.children.size();
    // Subtree count below each node.
    std::vector<Rational> node_count(nn, Rational(0));
    auto fill = [&](auto&& self, std::size_t node) -> Rational {
        if (ts.children[node].empty()) {
            node_count[node] = u[static_cast<std::size_t>(ts.leaf_column[node])];
            return node_count[node];
        }
        Rational total(0);
        for (const auto& [stage, child] : ts.children[node]) total += self(self, child);
        node_count[node] = total;
        return total;
    };
    fill(fill, ts.root);

    // Numerator: counts entering edges with the stage's label; denominator:
    // counts sitting at nodes whose floret contains the stage.
    std::vector<Rational> num(ts.n_stages(), Rational(0));
    std::vector<Rational> den_f(ts.n_florets(), Rational(0));
    for (std::size_t node = 0; node < nn; ++node) {
        if (ts.children[node].empty()) continue;
        std::size_t f = ts.floret_of_stage[ts.children[node].front().first];
        den_f[f] += node_count[node];
        for (const auto& [stage, child] : ts.children[node]) num[stage] += node_count[child];
    }
    TreeMLE out;
    out.s.resize(ts.n_stages());
    for (std::size_t i = 0; i < ts.n_stages(); ++i) {
        const Rational& d = den_f[ts.floret_of_stage[i]];
        if (d == 0) throw ZeroDenominator("floret aggregate count vanishes");
        out.s[i] = num[i] / d;
    }
    out.p = mle_probabilities(ts, out.s);
    return out;
}

HornPair tree_horn(const TreeStructure& ts) {
    HornPair pair;
    std::size_t n = ts.n_paths();
    for (std::size_t i = 0; i < ts.n_stages(); ++i) {
        std::vector<Integer> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = ts.mu[i][j];
        pair.H.entries.push_back(std::move(row));
        pair.H.row_labels.push_back(ts.stage_labels[i]);
    }
    for (std::size_t f = 0; f < ts.n_florets(); ++f) {
        std::vector<Integer> row(n, Integer(0));
        for (std::size_t i : ts.florets[f])
            for (std::size_t j = 0; j < n; ++j) row[j] -= ts.mu[i][j];
        pair.H.entries.push_back(std::move(row));
        pair.H.row_labels.push_back("f" + std::to_string(f + 1));
    }
    pair.lambda.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Integer e(0);
        for (std::size_t f = 0; f < ts.n_florets(); ++f)
            e += pair.H.entries[ts.n_stages() + f][j];
        pair.lambda[j] = (mpz_odd_p(e.get_mpz_t())) ? Rational(-1) : Rational(1);
    }
    return pair;
}

StagedTree identify_florets(const StagedTree& t, const std::vector<std::string>& f,
                            const std::vector<std::string>& f_prime) {
    if (f.size() != f_prime.size()) throw SizeMismatch("florets have different sizes");
    std::set<std::string> fs(f.begin(), f.end()), fps(f_prime.begin(), f_prime.end());
    if (fs == fps) throw SizeMismatch("cannot identify a floret with itself");
    for (const auto& lab : fs)
        if (fps.count(lab)) throw SizeMismatch("florets are not disjoint");

    // Verify both label sets actually occur as florets of t.
    TreeStructure ts = compile_tree(t);
    auto has_floret = [&](const std::set<std::string>& want) {
        for (const auto& fl : ts.florets) {
            std::set<std::string> got;
            for (std::size_t i : fl) got.insert(ts.stage_labels[i]);
            if (got == want) return true;
        }
        return false;
    };
    if (!has_floret(fs) || !has_floret(fps))
        throw SizeMismatch("label set is not a floret of the tree");

    std::map<std::string, std::string> rename;
    for (std::size_t k = 0; k < f.size(); ++k) rename[f_prime[k]] = f[k];
    StagedTree out = t;
    for (auto& e : out.edges) {
        auto it = rename.find(e.label);
        if (it != rename.end()) e.label = it->second;
    }
    // The merge must preserve validity (florets equal or disjoint).
    auto violations = tree_validate(out);
    if (!violations.empty()) throw std::invalid_argument(violations.front());
    return out;
}

bool tree_equivalent(const StagedTree& t1, const StagedTree& t2) {
    TreeStructure a = compile_tree(t1), b = compile_tree(t2);
    if (a.n_paths() != b.n_paths()) return false;
    HornPair ra = reduce_horn(tree_horn(a)), rb = reduce_horn(tree_horn(b));
    return horn_pair_equal(ra, rb);
}

}  // namespace ratmle
