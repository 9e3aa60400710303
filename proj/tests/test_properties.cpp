// Seeded cross-module property suite: friendliness of tree-derived pairs,
// MLE idempotence, exact critical-point checks, the Delta(Hu) = 0 identity,
// estimator agreement, and model-equivalence pins.

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ratmle/disc_triple.hpp"
#include "ratmle/families.hpp"
#include "ratmle/graphical.hpp"
#include "ratmle/verify.hpp"
#include "test_util.hpp"

using namespace ratmle;
using namespace ratmle::testutil;

namespace {

std::vector<Rational> apply_h(const HornMatrix& h, const std::vector<Rational>& u) {
    std::vector<Rational> out(h.rows(), Rational(0));
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) out[i] += Rational(h.entries[i][j]) * u[j];
    return out;
}

ContingencyTable random_table(std::mt19937_64& rng, std::vector<std::size_t> dims) {
    ContingencyTable t;
    t.dims = std::move(dims);
    std::size_t total = 1;
    for (std::size_t d : t.dims) total *= d;
    for (std::size_t i = 0; i < total; ++i)
        t.counts.push_back(Rational(1 + static_cast<long>(rng() % 12)));
    return t;
}

// The binomial model with two trials: Delta = (-x0)^2 - (x1 + x2)^2 with
// the x0^2 term marked.
MarkedPoly multinomial_marked() {
    MarkedPoly mp;
    mp.delta = poly(3, {term(1, {2, 0, 0}), term(-1, {0, 2, 0}), term(-2, {0, 1, 1}),
                        term(-1, {0, 0, 2})});
    mp.marked_index = 0;  // x0^2 is graded-lex largest
    return mp;
}

}  // namespace

TEST_CASE("friendliness identity holds for 200 generated trees") {
    std::mt19937_64 rng(90210);
    int instances = 0;
    while (instances < 200) {
        StagedTree t = random_staged_tree(rng);
        TreeStructure ts = compile_tree(t);
        if (ts.n_florets() > 7 || ts.n_paths() > 20) continue;
        ++instances;
        HornPair pair = tree_horn(ts);
        CHECK(friendliness_check(pair.H, pair.lambda));
        CHECK(horn_pair_check(reduce_horn(pair)).horn);
    }
}

TEST_CASE("MLE idempotence over 200 generated instances") {
    std::mt19937_64 rng(31337);
    int instances = 0;
    while (instances < 200) {
        StagedTree t = random_staged_tree(rng);
        TreeStructure ts = compile_tree(t);
        if (ts.n_florets() > 7 || ts.n_paths() > 20) continue;
        ++instances;
        HornPair red = reduce_horn(tree_horn(ts));
        VerifyReport rep = mle_idempotence_check(red, rng(), 1);
        CHECK(rep.failures == 0);
        // The tree estimator is a fixed point on its own image as well.
        std::vector<Rational> u = random_counts(rng, ts.n_paths());
        TreeMLE mle = tree_mle(ts, u);
        std::vector<Rational> scaled = mle.p;
        for (auto& x : scaled) x *= 720;
        CHECK(tree_mle(ts, scaled).p == mle.p);
    }
}

TEST_CASE("critical gradient vanishes at v = u for every verified pair") {
    std::mt19937_64 rng(404);
    HornPair multinomial = pair_from_marked_poly(multinomial_marked());
    for (const HornPair& pair :
         {coin_pair(), quartic_pair(), chain4_pair(), multinomial}) {
        REQUIRE(horn_pair_check(reduce_horn(pair)).horn);
        for (int t = 0; t < 100; ++t) {
            std::vector<Rational> u = random_counts(rng, pair.H.cols());
            for (const Rational& g : critical_gradient(pair, u, u)) CHECK(g == 0);
        }
    }
}

TEST_CASE("Delta(Hu) = 0 for verified triples") {
    std::mt19937_64 rng(555);
    for (const HornPair& pair : {coin_pair(), quartic_pair(), chain4_pair()}) {
        MarkedPoly mp = marked_poly_from_pair(pair);
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> u = random_counts(rng, pair.H.cols());
            CHECK(mp.delta.eval(apply_h(pair.H, u)) == 0);
        }
    }
    // Every model found by the scan satisfies the identity for its Delta.
    FamilyInstance inst = univariate_instance(1, 2, 3);
    for (const auto& rec : inst.models) {
        MarkedPoly mp{inst.delta, rec.term_index};
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> u = random_counts(rng, rec.pair.H.cols());
            CHECK(mp.delta.eval(apply_h(rec.pair.H, u)) == 0);
        }
    }
}

TEST_CASE("closed-form and aggregated tree estimators agree") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 50; ++t) {
        StagedTree tree = random_staged_tree(rng);
        TreeStructure ts = compile_tree(tree);
        if (ts.n_paths() > 30) continue;
        std::vector<Rational> u = random_counts(rng, ts.n_paths());
        TreeMLE a = tree_mle(ts, u), b = tree_mle_aggregated(ts, u);
        CHECK(a.s == b.s);
        CHECK(a.p == b.p);
    }
}

TEST_CASE("decomposable star and chain MLEs equal staged-tree MLEs") {
    std::mt19937_64 rng(808);

    // Chain graph on four binary variables vs the 4-chain staged tree.
    ContingencyTable u = random_table(rng, {2, 2, 2, 2});
    UndirectedGraph chain;
    chain.n = 4;
    chain.edges = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(decomposable_mle(chain, u).counts == tree_mle(compile_tree(chain4_tree()), u.counts).p);

    // Star graph vs the staged tree of the oriented star (center first).
    UndirectedGraph star;
    star.n = 4;
    star.edges = {{0, 1}, {0, 2}, {0, 3}};
    DAGModel oriented;
    oriented.n = 4;
    oriented.parents = {{}, {0}, {0}, {0}};
    oriented.states = {2, 2, 2, 2};
    TreeStructure ts = compile_tree(from_bayesian_network(oriented));
    CHECK(decomposable_mle(star, u).counts == tree_mle(ts, u.counts).p);
}

TEST_CASE("identifying the middle florets of the 4-chain yields independence") {
    StagedTree merged = identify_florets(chain4_tree(), {"s6", "s7"}, {"s8", "s9"});
    CHECK(tree_equivalent(merged, independence_tree(4)));
    CHECK_FALSE(tree_equivalent(chain4_tree(), independence_tree(4)));
}

TEST_CASE("two-trial multinomial pair") {
    HornPair pair = pair_from_marked_poly(multinomial_marked());
    CHECK(pair.H.entries == IntMatrix{{Integer(-2), Integer(-2), Integer(-2)},
                                      {Integer(2), Integer(1), Integer(0)},
                                      {Integer(0), Integer(1), Integer(2)}});
    CHECK(pair.lambda == std::vector<Rational>{Rational(1), Rational(2), Rational(1)});
    CHECK(friendliness_check(pair.H, pair.lambda));
    CHECK(horn_pair_check(pair).horn);
    // Binomial probabilities from counts (u0, u1, u2).
    std::vector<Rational> p = horn_map_eval(pair, {Rational(1), Rational(2), Rational(1)});
    CHECK(p == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)});
}
