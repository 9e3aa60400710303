#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratmle/rational.hpp"
#include "ratmle/sparse_poly.hpp"

namespace ratmle {

using IntMatrix = std::vector<std::vector<Integer>>;

// m x (n+1) integer matrix with zero column sums; rows carry the linear
// forms (Hu)_i, columns the exponent vectors h_j of the associated map.
struct HornMatrix {
    IntMatrix entries;
    std::vector<std::string> row_labels;  // optional; empty or size m

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
};

struct HornPair {
    HornMatrix H;
    std::vector<Rational> lambda;  // length n+1, all nonzero
};

struct HornVerdict {
    bool friendly = false;
    bool horn = false;
    std::vector<int> sigma;  // sign(H * all-ones), one entry per row
};

struct SearchBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural validation: rectangular, m >= 1, zero column sums, lambda
// entries nonzero and matching the column count. Throws invalid_argument.
void validate_horn_input(const HornMatrix& H, const std::vector<Rational>& lambda);

// Row / gcd helpers shared with the reduction.
bool is_zero_row(const std::vector<Integer>& row);
// Row divided by the gcd of its entries, sign fixed so the first nonzero
// entry is positive; undefined for zero rows.
std::vector<Integer> primitive_row(const std::vector<Integer>& row);

// True iff H has no zero rows and no two collinear rows.
bool is_reduced(const HornMatrix& H);

// Coordinate j of the map: lambda_j * prod_i ((Hu)_i)^{H[i][j]}.
// Throws PoleAtInput when a vanishing linear form carries a negative
// exponent; a vanishing form with positive exponent contributes factor 0.
std::vector<Rational> horn_map_eval(const HornPair& pair, const std::vector<Rational>& u);

// Decides sum_j lambda_j (Hu)^{h_j} == 1 in the rational function field by
// clearing denominators; the resulting identity is decided by full
// expansion when its total degree is <= expansion_degree_limit, otherwise
// by exact evaluation on a deterministic integer grid exceeding the
// per-variable degree bound.
bool friendliness_check(const HornMatrix& H, const std::vector<Rational>& lambda,
                        long expansion_degree_limit = 12);

// Aggregates collinear rows (Remark-2.2-style reduction), deleting groups
// that sum to zero and rescaling lambda so the map is pointwise unchanged.
HornPair reduce_horn(const HornPair& pair);

// Friendly + reduced + constant row signs + positivity at the all-ones
// vector; sigma = sign(H * all-ones).
HornVerdict horn_pair_check(const HornPair& pair);

// Equality of pairs up to row permutation, with columns matched by the
// supplied bijection (column j of p1 corresponds to column bij[j] of p2)
// or by exact backtracking search when none is given.
bool horn_pair_equal(const HornPair& p1, const HornPair& p2,
                     const std::optional<std::vector<std::size_t>>& column_bijection = std::nullopt);

}  // namespace ratmle
