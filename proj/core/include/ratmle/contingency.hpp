#pragma once

#include <cstddef>
#include <vector>

#include "ratmle/rational.hpp"

namespace ratmle {

// Dense m-way table of nonnegative rational counts, row-major (the last
// index varies fastest).
struct ContingencyTable {
    std::vector<std::size_t> dims;
    std::vector<Rational> counts;

    std::size_t ways() const { return dims.size(); }
    std::size_t size() const;
    std::size_t flat_index(const std::vector<std::size_t>& idx) const;
    std::vector<std::size_t> unflatten(std::size_t flat) const;
    const Rational& at(const std::vector<std::size_t>& idx) const;
    Rational& at(const std::vector<std::size_t>& idx);
    Rational total() const;

    // Throws invalid_argument when dims and counts disagree or an entry is
    // negative.
    void validate() const;
};

// Sum out every index not in C (C holds 0-based axis numbers, any order;
// duplicates rejected). The result's dims follow C sorted ascending.
// C = all axes returns the table unchanged; C = {} yields the 0-way table
// holding the grand total.
ContingencyTable marginal(const ContingencyTable& u, std::vector<std::size_t> C);

}  // namespace ratmle
