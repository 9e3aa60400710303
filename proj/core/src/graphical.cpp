#include "ratmle/graphical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace ratmle {

namespace {

std::vector<std::set<std::size_t>> adjacency(const UndirectedGraph& g) {
    std::vector<std::set<std::size_t>> adj(g.n);
    for (auto [a, b] : g.edges) {
        if (a >= g.n || b >= g.n) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop in undirected graph");
        adj[a].insert(b);
        adj[b].insert(a);
    }
    return adj;
}

}  // namespace

CliqueDecomposition chordal_decompose(const UndirectedGraph& g) {
    auto adj = adjacency(g);
    std::size_t n = g.n;
    CliqueDecomposition out;

    // Maximum-cardinality search; ties broken by lowest vertex index.
    std::vector<long> weight(n, 0);
    std::vector<bool> chosen(n, false);
    std::vector<std::size_t> rank(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!chosen[v] && (best == n || weight[v] > weight[best])) best = v;
        chosen[best] = true;
        rank[best] = step;
        out.peo.push_back(best);
        for (std::size_t w : adj[best])
            if (!chosen[w]) ++weight[w];
    }

    // Chordality: earlier neighbors of each vertex must form a clique
    // "through" the latest of them.
    std::vector<std::vector<std::size_t>> earlier(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w : adj[v])
            if (rank[w] < rank[v]) earlier[v].push_back(w);
        if (earlier[v].empty()) continue;
        std::size_t last = earlier[v][0];
        for (std::size_t w : earlier[v])
            if (rank[w] > rank[last]) last = w;
        for (std::size_t w : earlier[v])
            if (w != last && !adj[last].count(w))
                throw NotChordal("graph admits no perfect elimination ordering");
    }

    // Candidate cliques C_v = {v} + earlier neighbors, in MCS order; keep
    // the maximal ones. Separators via the running intersection property.
    std::vector<std::vector<std::size_t>> cand;
    for (std::size_t v : out.peo) {
        std::vector<std::size_t> c = earlier[v];
        c.push_back(v);
        std::sort(c.begin(), c.end());
        cand.push_back(std::move(c));
    }
    auto subset = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (std::size_t k = 0; k < cand.size() && maximal; ++k)
            if (k != i && subset(cand[i], cand[k]) && (cand[i] != cand[k] || k < i))
                maximal = false;
        if (maximal) out.cliques.push_back(cand[i]);
    }
    std::set<std::size_t> seen;
    for (const auto& c : out.cliques) {
        std::vector<std::size_t> sep;
        for (std::size_t v : c)
            if (seen.count(v)) sep.push_back(v);
        // Empty intersection marks the first clique of a component.
        if (!sep.empty()) out.separators.push_back(sep);
        for (std::size_t v : c) seen.insert(v);
    }
    return out;
}

ContingencyTable decomposable_mle(const UndirectedGraph& g, const ContingencyTable& u) {
    u.validate();
    if (u.ways() != g.n) throw std::invalid_argument("table arity does not match graph order");
    Rational grand = u.total();
    if (grand == 0) throw std::invalid_argument("table with zero total");
    CliqueDecomposition cd = chordal_decompose(g);

    ContingencyTable p;
    p.dims = u.dims;
    p.counts.assign(u.size(), Rational(1));

    std::vector<ContingencyTable> cmarg, smarg;
    for (const auto& c : cd.cliques) cmarg.push_back(marginal(u, c));
    for (const auto& s : cd.separators) smarg.push_back(marginal(u, s));

    auto restrict_flat = [&](const std::vector<std::size_t>& axes, const ContingencyTable& m,
                             const std::vector<std::size_t>& idx) -> const Rational& {
        std::size_t flat = 0;
        for (std::size_t k = 0; k < axes.size(); ++k) flat = flat * u.dims[axes[k]] + idx[axes[k]];
        return m.counts[flat];
    };

    long power = static_cast<long>(cd.cliques.size()) - static_cast<long>(cd.separators.size());
    Rational norm = pow_rational(grand, power);
    for (std::size_t flat = 0; flat < p.counts.size(); ++flat) {
        auto idx = u.unflatten(flat);
        Rational v(1);
        for (std::size_t k = 0; k < cd.cliques.size(); ++k)
            v *= restrict_flat(cd.cliques[k], cmarg[k], idx);
        for (std::size_t k = 0; k < cd.separators.size(); ++k) {
            const Rational& s = restrict_flat(cd.separators[k], smarg[k], idx);
            if (s == 0) throw ZeroDenominator("vanishing separator marginal");
            v /= s;
        }
        p.counts[flat] = v / norm;
    }
    return p;
}

std::vector<std::size_t> topological_order(const DAGModel& d) {
    if (d.parents.size() != d.n || d.states.size() != d.n)
        throw std::invalid_argument("DAG field sizes do not match node count");
    for (std::size_t s : d.states)
        if (s < 2) throw std::invalid_argument("every node needs at least two states");
    std::vector<std::size_t> indeg(d.n, 0);
    std::vector<std::vector<std::size_t>> children(d.n);
    for (std::size_t v = 0; v < d.n; ++v)
        for (std::size_t p : d.parents[v]) {
            if (p >= d.n) throw std::invalid_argument("parent index out of range");
            children[p].push_back(v);
            ++indeg[v];
        }
    std::vector<std::size_t> order;
    std::set<std::size_t> ready;
    for (std::size_t v = 0; v < d.n; ++v)
        if (indeg[v] == 0) ready.insert(v);
    while (!ready.empty()) {
        std::size_t v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (std::size_t c : children[v])
            if (--indeg[c] == 0) ready.insert(c);
    }
    if (order.size() != d.n) throw CyclicGraph("directed graph has a cycle");
    return order;
}

ContingencyTable bayes_net_mle(const DAGModel& d, const ContingencyTable& u) {
    u.validate();
    if (u.ways() != d.n) throw std::invalid_argument("table arity does not match node count");
    for (std::size_t v = 0; v < d.n; ++v)
        if (u.dims[v] != d.states[v]) throw std::invalid_argument("state counts do not match dims");
    topological_order(d);  // validates acyclicity
    Rational grand = u.total();

    ContingencyTable p;
    p.dims = u.dims;
    p.counts.assign(u.size(), Rational(1));

    for (std::size_t j = 0; j < d.n; ++j) {
        std::vector<std::size_t> pa = d.parents[j];
        std::sort(pa.begin(), pa.end());
        std::vector<std::size_t> fa = pa;
        fa.push_back(j);
        std::sort(fa.begin(), fa.end());
        ContingencyTable num = marginal(u, fa);
        ContingencyTable den = marginal(u, pa);
        for (std::size_t flat = 0; flat < p.counts.size(); ++flat) {
            auto idx = u.unflatten(flat);
            std::size_t nf = 0, df = 0;
            for (std::size_t a : fa) nf = nf * u.dims[a] + idx[a];
            for (std::size_t a : pa) df = df * u.dims[a] + idx[a];
            const Rational& dd = pa.empty() ? grand : den.counts[df];
            if (dd == 0) throw ZeroDenominator("vanishing parent marginal");
            p.counts[flat] *= num.counts[nf] / dd;
        }
    }
    return p;
}

StagedTree from_bayesian_network(const DAGModel& d) {
    std::vector<std::size_t> order = topological_order(d);
    std::vector<std::size_t> level_of(d.n);
    for (std::size_t k = 0; k < d.n; ++k) level_of[order[k]] = k;
    for (std::size_t v = 0; v < d.n; ++v)
        for (std::size_t p : d.parents[v])
            if (level_of[p] > level_of[v])
                throw CyclicGraph("parent after child in topological order");

    StagedTree t;
    t.nodes.push_back("r");
    // Build level by level; a node is a prefix assignment to order[0..k).
    struct Pending {
        std::string name;
        std::vector<std::size_t> config;  // states of order[0..k)
    };
    std::vector<Pending> frontier = {{"r", {}}};
    for (std::size_t k = 0; k < d.n; ++k) {
        std::size_t var = order[k];
        std::vector<std::size_t> pa = d.parents[var];
        std::sort(pa.begin(), pa.end());
        std::vector<Pending> next;
        for (const auto& node : frontier) {
            // Stage key: the variable plus its parents' states.
            std::string key = "v" + std::to_string(var);
            for (std::size_t p : pa)
                key += "_p" + std::to_string(p) + "=" + std::to_string(node.config[level_of[p]]);
            for (std::size_t st = 0; st < d.states[var]; ++st) {
                Pending child;
                child.config = node.config;
                child.config.push_back(st);
                child.name = node.name == "r" ? "n" : node.name;
                child.name += std::to_string(st);
                t.nodes.push_back(child.name);
                t.edges.push_back({node.name, child.name, key + ":" + std::to_string(st)});
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return t;
}

}  // namespace ratmle
