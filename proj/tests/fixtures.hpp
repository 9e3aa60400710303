#pragma once

#include <random>
#include <string>
#include <vector>

#include "ratmle/horn.hpp"
#include "ratmle/staged_tree.hpp"

namespace ratmle::testutil {

inline std::vector<Integer> irow(std::vector<long> v) {
    std::vector<Integer> r;
    r.reserve(v.size());
    for (long x : v) r.emplace_back(x);
    return r;
}

// Two-coin model: states (two heads, one head, tails-first), parameters
// (s0, s1) with MLE s0 = (2u0+u1)/(2u0+2u1+u2), s1 = (u1+u2)/(2u0+2u1+u2).
inline HornPair coin_pair() {
    HornPair p;
    p.H.entries = {irow({2, 1, 0}), irow({0, 1, 1}), irow({-2, -2, -1})};
    p.lambda = {Rational(1), Rational(1), Rational(-1)};
    return p;
}

// The running 4-column example pair (quartic model with two relations).
inline HornPair quartic_pair() {
    HornPair p;
    p.H.entries = {irow({-1, -1, -2, -2}), irow({1, 0, 3, 2}), irow({1, 3, 0, 2}),
                   irow({-1, -2, -1, -2})};
    p.lambda = {Rational(2, 3), Rational(-4, 27), Rational(-4, 27), Rational(1, 27)};
    return p;
}

// 21 x 16 pair of the binary 4-chain staged tree: one +1-supported row per
// stage, one -1-supported row per floret, lambda all ones. Row order:
// s0..s13 then f1..f7.
inline HornPair chain4_pair() {
    auto support_row = [](std::vector<int> cols, long val) {
        std::vector<Integer> r(16, Integer(0));
        for (int c : cols) r[static_cast<std::size_t>(c)] = val;
        return r;
    };
    auto range = [](int lo, int hi) {  // inclusive bounds
        std::vector<int> v;
        for (int c = lo; c <= hi; ++c) v.push_back(c);
        return v;
    };
    HornPair p;
    auto& e = p.H.entries;
    auto& lab = p.H.row_labels;
    auto add = [&](const char* name, std::vector<int> cols, long val) {
        e.push_back(support_row(std::move(cols), val));
        lab.emplace_back(name);
    };
    add("s0", range(0, 7), 1);
    add("s1", range(8, 15), 1);
    add("s2", range(0, 3), 1);
    add("s3", range(4, 7), 1);
    add("s4", range(8, 11), 1);
    add("s5", range(12, 15), 1);
    add("s6", {0, 1, 8, 9}, 1);
    add("s7", {2, 3, 10, 11}, 1);
    add("s8", {4, 5, 12, 13}, 1);
    add("s9", {6, 7, 14, 15}, 1);
    add("s10", {0, 4, 8, 12}, 1);
    add("s11", {1, 5, 9, 13}, 1);
    add("s12", {2, 6, 10, 14}, 1);
    add("s13", {3, 7, 11, 15}, 1);
    add("f1", range(0, 15), -1);
    add("f2", range(0, 7), -1);
    add("f3", range(8, 15), -1);
    add("f4", {0, 1, 2, 3, 8, 9, 10, 11}, -1);
    add("f5", {4, 5, 6, 7, 12, 13, 14, 15}, -1);
    add("f6", {0, 1, 4, 5, 8, 9, 12, 13}, -1);
    add("f7", {2, 3, 6, 7, 10, 11, 14, 15}, -1);
    p.lambda.assign(16, Rational(1));
    return p;
}

// Flip a coin; on heads flip again. Leaves: HH, HT, T.
inline StagedTree coin_tree() {
    StagedTree t;
    t.nodes = {"r", "h", "HH", "HT", "T"};
    t.edges = {{"r", "h", "s0"}, {"r", "T", "s1"}, {"h", "HH", "s0"}, {"h", "HT", "s1"}};
    return t;
}

// Mirror image: on tails flip again. Leaves: H, TH, TT.
inline StagedTree coin_tree_mirror() {
    StagedTree t;
    t.nodes = {"r", "t", "H", "TH", "TT"};
    t.edges = {{"r", "H", "s1"}, {"r", "t", "s0"}, {"t", "TH", "s1"}, {"t", "TT", "s0"}};
    return t;
}

// One floret with k leaves: the saturated model.
inline StagedTree star_tree(std::size_t k) {
    StagedTree t;
    t.nodes.push_back("r");
    for (std::size_t i = 0; i < k; ++i) {
        t.nodes.push_back("L" + std::to_string(i));
        t.edges.push_back({"r", "L" + std::to_string(i), "s" + std::to_string(i)});
    }
    return t;
}

// Binary Markov chain on four variables; stages depend on the previous
// variable's value. Stage order s0..s13, florets f1..f7.
inline StagedTree chain4_tree() {
    StagedTree t;
    auto node = [&](const std::string& name) { t.nodes.push_back(name); };
    node("r");
    node("n0");
    node("n1");
    t.edges.push_back({"r", "n0", "s0"});
    t.edges.push_back({"r", "n1", "s1"});
    for (const std::string b1 : {"0", "1"}) {
        node("n" + b1 + "0");
        node("n" + b1 + "1");
        std::string base = b1 == "0" ? "s2" : "s4";
        std::string next = b1 == "0" ? "s3" : "s5";
        t.edges.push_back({"n" + b1, "n" + b1 + "0", base});
        t.edges.push_back({"n" + b1, "n" + b1 + "1", next});
    }
    for (const std::string b1 : {"0", "1"})
        for (const std::string b2 : {"0", "1"}) {
            std::string p = "n" + b1 + b2;
            node(p + "0");
            node(p + "1");
            t.edges.push_back({p, p + "0", b2 == "0" ? "s6" : "s8"});
            t.edges.push_back({p, p + "1", b2 == "0" ? "s7" : "s9"});
        }
    for (const std::string b1 : {"0", "1"})
        for (const std::string b2 : {"0", "1"})
            for (const std::string b3 : {"0", "1"}) {
                std::string p = "n" + b1 + b2 + b3;
                node(p + "0");
                node(p + "1");
                t.edges.push_back({p, p + "0", b3 == "0" ? "s10" : "s12"});
                t.edges.push_back({p, p + "1", b3 == "0" ? "s11" : "s13"});
            }
    return t;
}

// Independence of two variables with k states each: the second level
// shares one floret across all first-level nodes.
inline StagedTree independence_tree(std::size_t k) {
    StagedTree t;
    t.nodes.push_back("r");
    for (std::size_t i = 0; i < k; ++i) {
        std::string mid = "m" + std::to_string(i);
        t.nodes.push_back(mid);
        t.edges.push_back({"r", mid, "a" + std::to_string(i)});
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::string leaf = "L" + std::to_string(i) + "_" + std::to_string(j);
            t.nodes.push_back(leaf);
            t.edges.push_back({"m" + std::to_string(i), leaf, "b" + std::to_string(j)});
        }
    return t;
}

// Random staged tree: levels of nodes, each level partitioned into stage
// groups sharing a floret of fresh labels. Florets are equal or disjoint
// by construction. depth <= 4, branching 2..3.
inline StagedTree random_staged_tree(std::mt19937_64& rng, int max_depth = 4) {
    StagedTree t;
    t.nodes.push_back("r");
    std::vector<std::string> frontier = {"r"};
    int depth = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_depth));
    int label_counter = 0;
    int node_counter = 0;
    for (int level = 0; level < depth; ++level) {
        // Partition the frontier into up to 3 stage groups.
        std::size_t ngroups = 1 + rng() % std::min<std::size_t>(frontier.size(), 3);
        std::vector<std::size_t> group(frontier.size());
        for (std::size_t i = 0; i < frontier.size(); ++i)
            group[i] = (i < ngroups) ? i : rng() % ngroups;  // every group nonempty
        std::vector<std::vector<std::string>> labels(ngroups);
        for (std::size_t gidx = 0; gidx < ngroups; ++gidx) {
            std::size_t width = 2 + rng() % 2;
            for (std::size_t c = 0; c < width; ++c)
                labels[gidx].push_back("t" + std::to_string(label_counter++));
        }
        std::vector<std::string> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            // Leaves may stop early below the first level, but keep the
            // frontier nonempty so the requested depth is reached.
            if (level > 0 && (rng() % 3 == 0) && !(next.empty() && i + 1 == frontier.size()))
                continue;
            for (const auto& lab : labels[group[i]]) {
                std::string child = "v" + std::to_string(node_counter++);
                t.nodes.push_back(child);
                t.edges.push_back({frontier[i], child, lab});
                next.push_back(child);
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return t;
}

// Exact positive rational counts for a tree with n leaf columns.
inline std::vector<Rational> random_counts(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> u(n);
    for (auto& q : u) {
        q = Rational(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 6));
        q.canonicalize();
    }
    return u;
}

}  // namespace ratmle::testutil
