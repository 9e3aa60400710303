#pragma once

#include <random>
#include <vector>

#include "ratmle/sparse_poly.hpp"

namespace ratmle::testutil {

// Build a term list entry from a plain coefficient and exponent vector.
inline SparsePoly::Term term(long c, std::vector<int> e) {
    return {Monomial(std::move(e)), Rational(c)};
}

inline SparsePoly poly(std::size_t nvars, std::vector<SparsePoly::Term> ts) {
    return SparsePoly::from_terms(nvars, std::move(ts));
}

// Deterministic random polynomial: up to max_terms terms, exponents in
// [emin, emax], small rational coefficients.
inline SparsePoly random_poly(std::mt19937_64& rng, std::size_t nvars, int max_terms, int emin,
                              int emax) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> ed(emin, emax);
    std::uniform_int_distribution<long> cn(-9, 9);
    std::uniform_int_distribution<long> cd(1, 5);
    std::vector<SparsePoly::Term> ts;
    int k = nt(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(nvars);
        for (auto& x : e) x = ed(rng);
        Rational c(cn(rng), cd(rng));
        c.canonicalize();  // the (num, den) ctor does not reduce
        ts.push_back({Monomial(std::move(e)), std::move(c)});
    }
    return SparsePoly::from_terms(nvars, std::move(ts));
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n, bool nonzero) {
    std::uniform_int_distribution<long> cn(-7, 7);
    std::uniform_int_distribution<long> cd(1, 4);
    std::vector<Rational> p(n);
    for (auto& q : p) {
        long num = cn(rng);
        if (nonzero)
            while (num == 0) num = cn(rng);
        q = Rational(num, cd(rng));
        q.canonicalize();
    }
    return p;
}

}  // namespace ratmle::testutil
