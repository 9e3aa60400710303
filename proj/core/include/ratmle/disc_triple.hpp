#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ratmle/horn.hpp"
#include "ratmle/sparse_poly.hpp"

namespace ratmle {

struct MarkedTermAbsent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OnesNotInRowSpan : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A polynomial with one distinguished term, addressed by its index in the
// canonical graded-lex term order.
struct MarkedPoly {
    SparsePoly delta;
    std::size_t marked_index = 0;

    const SparsePoly::Term& marked_term() const;
};

// Exact rank of an integer matrix over the rationals.
std::size_t rational_rank(const IntMatrix& a);

// Does v lie in the rational row span of a?
bool in_row_span(const IntMatrix& a, const std::vector<Rational>& v);

// Structural check for a toric matrix: full row rank and all-ones in the
// row span. Throws invalid_argument / OnesNotInRowSpan.
void validate_toric(const IntMatrix& a);

// Delta / m = 1 - sum_j lambda_j x^{h_j}: columns are exponent
// differences e_j - e_m in canonical term order, lambda_j = -c_j / c_m.
HornPair pair_from_marked_poly(const MarkedPoly& mp);

// Eq.-13-style inverse: m = x^{max_k (h_k^-)}, Delta = m (1 - sum lambda_k x^{h_k}).
MarkedPoly marked_poly_from_pair(const HornPair& pair);

// Lattice basis of { a : aH = 0 } via integer Hermite reduction; throws
// OnesNotInRowSpan when the all-ones vector is outside the row span.
IntMatrix left_kernel_basis(const HornMatrix& h);

struct TripleVerdict {
    bool a_homogeneous = false;      // AH = 0 and zero column sums
    bool reduced = false;            // H equals its reduction
    bool constant_row_signs = false; // sign(Hu) constant over positive u
    bool positive = false;           // lambda_j sigma^{h_j} > 0 for all j
    bool ok = false;
    std::vector<int> sigma;
    HornPair pair;
};

TripleVerdict triple_check(const IntMatrix& a, const MarkedPoly& mp);

// Coordinate j = lambda_j x^{h_j} of the monomial map of (Delta, m).
std::vector<Rational> monomial_map_eval(const MarkedPoly& mp, const std::vector<Rational>& x);

struct ModelRecord {
    std::size_t term_index = 0;  // position of the marked term in Delta
    HornPair pair;               // reduced
    std::vector<int> sigma;
};

// Per-term scan: mark each term of Delta, reduce the derived pair, keep
// terms whose reduction has constant row signs and a positive image at the
// all-ones vector. Deterministic output order by term index.
std::vector<ModelRecord> algorithm1_scan(const IntMatrix& a, const SparsePoly& delta,
                                         std::size_t jobs = 1);

}  // namespace ratmle
