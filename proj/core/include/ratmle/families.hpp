#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ratmle/disc_triple.hpp"
#include "ratmle/sparse_poly.hpp"

namespace ratmle {

// One scanned polynomial: its parameters, toric matrix, the polynomial
// itself, and the marked terms that survive the scan.
struct FamilyInstance {
    std::string label;
    std::vector<long> params;
    IntMatrix a;
    SparsePoly delta;
    std::vector<ModelRecord> models;

    std::size_t n_terms() const { return delta.term_count(); }
};

struct ScanReport {
    std::vector<FamilyInstance> instances;

    std::size_t n_instances() const { return instances.size(); }
    std::size_t total_terms() const;
    std::size_t total_models() const;
    // total_models / total_terms, exact.
    Rational pass_fraction() const;
};

// Family 1: A = [[1,1,1,1],[0,a,b,c]], Delta = disc_t(x1 + x2 t^a + x3 t^b
// + x4 t^c), over 0 < a < b < c <= bound with gcd(a,b,c) = 1.
std::vector<std::vector<long>> univariate_params(long bound);
FamilyInstance univariate_instance(long alpha, long beta, long gamma);
ScanReport univariate_family_scan(long bound, std::size_t jobs = 1);

// Family 2: A = [[0,a,b,0,c,e],[0,0,0,1,1,1],[1,1,1,1,1,1]], Delta =
// Res_t(x1 + x2 t^a + x3 t^b, x4 + x5 t^c + x6 t^e) content-stripped,
// over 0 < a < b <= bound, 0 < c < e <= bound with gcd(a,b) = gcd(c,e) = 1,
// one representative per unordered pair {(a,b),(c,e)}.
std::vector<std::vector<long>> trinomial_params(long bound);
FamilyInstance trinomial_instance(long alpha, long beta, long gamma, long epsilon);
ScanReport trinomial_family_scan(long bound, std::size_t jobs = 1);

// Family 3: multiples of the linear form x1+x2+x3+x4 by binomials
// x^a +/- x^b with |a| = |b| in {1..max_degree} and gcd(x^a, x^b) = 1, or
// by trinomials x^a + x^b +/- x^c with |a| = |b| = |c| in {1..max_degree}
// and gcd(x^a, x^b, x^c) = 1. Multiplier monomials are enumerated in
// ascending exponent-lex order; for the mixed-sign trinomial the minus
// sign goes on the lex-smallest exponent vector.
enum class MultiplierShape { binomial, trinomial };
enum class MultiplierSign { plus, minus };
std::vector<FamilyInstance> linear_multiple_instances(MultiplierShape shape, MultiplierSign sign,
                                                      long max_degree);
ScanReport linear_multiple_scan(MultiplierShape shape, MultiplierSign sign, long max_degree,
                                std::size_t jobs = 1);

}  // namespace ratmle
