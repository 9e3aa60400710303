#pragma once

#include <vector>

#include "ratmle/sparse_poly.hpp"
#include "ratmle/unipoly.hpp"

namespace ratmle {

// Fraction-free Bareiss determinant over the polynomial ring.
SparsePoly bareiss_det(std::vector<std::vector<SparsePoly>> m);

// Laplace cofactor expansion; independent cross-check path, sizes <= 8.
SparsePoly cofactor_det(const std::vector<std::vector<SparsePoly>>& m);

std::vector<std::vector<SparsePoly>> sylvester_matrix(const UniPolyOverRing& f,
                                                      const UniPolyOverRing& g);

// Determinant of the Sylvester matrix in t; requires deg f, deg g >= 1.
SparsePoly sylvester_resultant(const UniPolyOverRing& f, const UniPolyOverRing& g);

// Res_t(f, f') / lc(f), stripped of rational and monomial content, with the
// trailing (graded-lex-minimal) term normalized positive. Requires deg f >= 2.
SparsePoly discriminant_t(const UniPolyOverRing& f);

}  // namespace ratmle
