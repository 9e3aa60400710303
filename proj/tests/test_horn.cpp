#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ratmle/horn.hpp"
#include "test_util.hpp"

using namespace ratmle;
using namespace ratmle::testutil;

TEST_CASE("input validation") {
    HornPair p = coin_pair();
    CHECK_NOTHROW(validate_horn_input(p.H, p.lambda));
    HornPair bad = p;
    bad.H.entries[0][0] = 3;  // breaks the zero column sum
    CHECK_THROWS_AS(validate_horn_input(bad.H, bad.lambda), std::invalid_argument);
    bad = p;
    bad.lambda[1] = 0;
    CHECK_THROWS_AS(validate_horn_input(bad.H, bad.lambda), std::invalid_argument);
    bad = p;
    bad.lambda.pop_back();
    CHECK_THROWS_AS(validate_horn_input(bad.H, bad.lambda), std::invalid_argument);
}

TEST_CASE("friendliness: pinned examples") {
    HornPair coin = coin_pair();
    CHECK(friendliness_check(coin.H, coin.lambda));
    CHECK_FALSE(friendliness_check(coin.H, {Rational(1), Rational(1), Rational(1)}));

    HornPair q = quartic_pair();
    CHECK(friendliness_check(q.H, q.lambda));

    HornPair c4 = chain4_pair();
    CHECK(friendliness_check(c4.H, c4.lambda));
}

TEST_CASE("friendliness: expansion and grid paths agree") {
    HornPair coin = coin_pair();
    HornPair q = quartic_pair();
    // Force the grid path with a tiny expansion limit.
    CHECK(friendliness_check(coin.H, coin.lambda, /*expansion_degree_limit=*/-1));
    CHECK(friendliness_check(q.H, q.lambda, -1));
    CHECK_FALSE(friendliness_check(coin.H, {Rational(1), Rational(1), Rational(1)}, -1));
    CHECK_FALSE(friendliness_check(q.H, {Rational(1), Rational(1), Rational(1), Rational(1)}, -1));
}

TEST_CASE("horn map evaluation") {
    HornPair coin = coin_pair();
    std::vector<Rational> ones3(3, Rational(1));
    CHECK(horn_map_eval(coin, ones3) ==
          std::vector<Rational>{Rational(9, 25), Rational(6, 25), Rational(2, 5)});

    HornPair q = quartic_pair();
    std::vector<Rational> ones4(4, Rational(1));
    CHECK(horn_map_eval(q, ones4) ==
          std::vector<Rational>{Rational(2, 3), Rational(4, 27), Rational(4, 27), Rational(1, 27)});

    // (Hu)_3 = -2u0-2u1-u2 vanishes at (1,0,-2): negative exponents pole.
    CHECK_THROWS_AS(horn_map_eval(coin, {Rational(1), Rational(0), Rational(-2)}), PoleAtInput);
}

TEST_CASE("horn pair verdicts") {
    auto vc = horn_pair_check(coin_pair());
    CHECK(vc.friendly);
    CHECK(vc.horn);
    CHECK(vc.sigma == std::vector<int>{1, 1, -1});

    auto vq = horn_pair_check(quartic_pair());
    CHECK(vq.friendly);
    CHECK(vq.horn);
    CHECK(vq.sigma == std::vector<int>{-1, 1, 1, -1});

    // The unreduced chain pair is friendly but not a Horn pair.
    auto v4 = horn_pair_check(chain4_pair());
    CHECK(v4.friendly);
    CHECK_FALSE(v4.horn);
    // Its reduction is one.
    auto v4r = horn_pair_check(reduce_horn(chain4_pair()));
    CHECK(v4r.friendly);
    CHECK(v4r.horn);
}

TEST_CASE("reduction of the 4-chain pair") {
    HornPair c4 = chain4_pair();
    HornPair r = reduce_horn(c4);
    CHECK(r.H.rows() == 17);
    // s0+f2 and s1+f3 cancel; no surviving row is labeled by them.
    for (const auto& lab : r.H.row_labels) {
        CHECK(lab.find("s0") == std::string::npos);
        CHECK(lab.find("s1+") == std::string::npos);
        CHECK(lab != "s1");
        CHECK(lab.find("f2") == std::string::npos);
        CHECK(lab.find("f3") == std::string::npos);
    }
    CHECK(is_reduced(r.H));
    CHECK_FALSE(is_reduced(c4.H));

    // The reduction leaves the map pointwise unchanged.
    std::mt19937_64 rng(31415);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> u;
        for (int k = 0; k < 16; ++k) {
            Rational q(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 5));
            q.canonicalize();
            u.push_back(q);
        }
        CHECK(horn_map_eval(c4, u) == horn_map_eval(r, u));
    }
}

TEST_CASE("reduction deletes cancelling groups and rescales lambda") {
    HornPair p;
    p.H.entries = {irow({1, 1, 0}), irow({-1, -1, 0})};
    p.lambda = {Rational(2), Rational(1, 3), Rational(5)};
    HornPair r = reduce_horn(p);
    CHECK(r.H.rows() == 0);
    CHECK(r.lambda == std::vector<Rational>{Rational(-2), Rational(-1, 3), Rational(5)});
    std::mt19937_64 rng(99);
    for (int it = 0; it < 100; ++it) {
        auto u = random_point(rng, 3, /*nonzero=*/true);
        for (auto& q : u) q = abs(q);
        CHECK(horn_map_eval(p, u) == horn_map_eval(r, u));
    }
}

TEST_CASE("reduction merges collinear rows with nonzero sum") {
    // Rows 2r and -r with r = (1,0,-1) merge into r itself; two extra
    // non-collinear rows balance the column sums.
    HornPair p;
    p.H.entries = {irow({2, 0, -2}), irow({-1, 0, 1}), irow({-1, 1, 0}), irow({0, -1, 1})};
    p.lambda = {Rational(1), Rational(7), Rational(1)};
    HornPair r = reduce_horn(p);
    CHECK(r.H.rows() == 3);
    CHECK(r.H.entries[0] == irow({1, 0, -1}));
    CHECK(is_reduced(r.H));
    CHECK(r.lambda == std::vector<Rational>{Rational(-4), Rational(7), Rational(-1, 4)});
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 100; ++it) {
        auto u = random_point(rng, 3, true);
        for (auto& q : u) q = abs(q);
        try {
            auto lhs = horn_map_eval(p, u);
            CHECK(lhs == horn_map_eval(r, u));
            ++checked;
        } catch (const PoleAtInput&) {
            // u0 == u2 makes a form vanish; not a generic point.
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("already-reduced pairs come back unchanged") {
    HornPair q = quartic_pair();
    HornPair r = reduce_horn(q);
    CHECK(r.H.entries == q.H.entries);
    CHECK(r.lambda == q.lambda);
}

TEST_CASE("horn map invariants on verified pairs") {
    std::mt19937_64 rng(271828);
    for (const HornPair& p : {coin_pair(), quartic_pair(), reduce_horn(chain4_pair())}) {
        auto verdict = horn_pair_check(p);
        REQUIRE(verdict.horn);
        std::size_t n = p.lambda.size();
        std::vector<int> sigma0 = verdict.sigma;
        for (int it = 0; it < 200; ++it) {
            std::vector<Rational> u;
            for (std::size_t k = 0; k < n; ++k) {
                Rational q(1 + static_cast<long>(rng() % 13), 1 + static_cast<long>(rng() % 7));
                q.canonicalize();
                u.push_back(q);
            }
            auto img = horn_map_eval(p, u);
            Rational total(0);
            for (const auto& x : img) {
                CHECK(x > 0);
                total += x;
            }
            CHECK(total == 1);
            // Degree-zero homogeneity.
            Rational c(2 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
            c.canonicalize();
            std::vector<Rational> cu = u;
            for (auto& x : cu) x *= c;
            CHECK(horn_map_eval(p, cu) == img);
            // Sign vector is the same at every positive point.
            std::vector<int> s;
            for (const auto& row : p.H.entries) {
                Rational f(0);
                for (std::size_t k = 0; k < n; ++k) f += Rational(row[k]) * u[k];
                s.push_back(sgn(f));
            }
            CHECK(s == sigma0);
        }
        // lambda_j * sigma^{h_j} > 0 for every column.
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = p.lambda[j];
            for (std::size_t i = 0; i < p.H.rows(); ++i) {
                long e = p.H.entries[i][j].get_si();
                if (sigma0[i] < 0 && (e % 2 != 0)) v = -v;
            }
            CHECK(v > 0);
        }
    }
}

TEST_CASE("pair equality up to row and column permutation") {
    HornPair q = quartic_pair();
    CHECK(horn_pair_equal(q, q));

    HornPair shuffled = q;
    std::swap(shuffled.H.entries[0], shuffled.H.entries[3]);
    std::swap(shuffled.H.entries[1], shuffled.H.entries[2]);
    CHECK(horn_pair_equal(q, shuffled));

    // Permute columns 1 and 2 (equal lambda values there).
    HornPair colperm = q;
    for (auto& row : colperm.H.entries) std::swap(row[1], row[2]);
    std::swap(colperm.lambda[1], colperm.lambda[2]);
    CHECK(horn_pair_equal(q, colperm));
    CHECK(horn_pair_equal(q, colperm, std::vector<std::size_t>{0, 2, 1, 3}));
    // A bijection sending columns to mismatched lambda values fails.
    CHECK_FALSE(horn_pair_equal(q, colperm, std::vector<std::size_t>{1, 0, 2, 3}));

    HornPair other = coin_pair();
    CHECK_FALSE(horn_pair_equal(q, other));

    HornPair scaled = q;
    scaled.lambda[0] *= 2;
    CHECK_FALSE(horn_pair_equal(q, scaled));
}
