#include "ratmle/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace ratmle {

SparsePoly bareiss_det(std::vector<std::vector<SparsePoly>> m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix not square");
    std::size_t nvars = m[0][0].nvars();
    if (n == 1) return m[0][0];

    int sign = 1;
    SparsePoly prev(nvars, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return SparsePoly(nvars);  // singular
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                SparsePoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? std::move(num) : num.exact_divide(prev);
            }
            m[i][k] = SparsePoly(nvars);
        }
        prev = m[k][k];
    }
    SparsePoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

SparsePoly cofactor_det(const std::vector<std::vector<SparsePoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (n > 8) throw std::invalid_argument("cofactor path limited to size 8");
    std::size_t nvars = m[0][0].nvars();
    if (n == 1) return m[0][0];
    SparsePoly det(nvars);
    std::vector<std::vector<SparsePoly>> minor(n - 1, std::vector<SparsePoly>(n - 1, SparsePoly(nvars)));
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        SparsePoly sub = m[0][c] * cofactor_det(minor);
        if (c % 2 == 0)
            det += sub;
        else
            det -= sub;
    }
    return det;
}

std::vector<std::vector<SparsePoly>> sylvester_matrix(const UniPolyOverRing& f,
                                                      const UniPolyOverRing& g) {
    long df = f.degree(), dg = g.degree();
    if (df < 1 || dg < 1) throw std::invalid_argument("sylvester: degrees must be >= 1");
    std::size_t nvars = f.nvars();
    std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<SparsePoly>> m(n, std::vector<SparsePoly>(n, SparsePoly(nvars)));
    // dg rows of f coefficients, then df rows of g coefficients,
    // lowest degree first (row r of the f block holds coeff(k) in column r+k).
    for (long r = 0; r < dg; ++r)
        for (long k = 0; k <= df; ++k) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeff(static_cast<std::size_t>(k));
    for (long r = 0; r < df; ++r)
        for (long k = 0; k <= dg; ++k) m[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + k)] = g.coeff(static_cast<std::size_t>(k));
    return m;
}

SparsePoly sylvester_resultant(const UniPolyOverRing& f, const UniPolyOverRing& g) {
    return bareiss_det(sylvester_matrix(f, g));
}

SparsePoly discriminant_t(const UniPolyOverRing& f) {
    long d = f.degree();
    if (d < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    UniPolyOverRing fp = f.derivative();
    SparsePoly res = sylvester_resultant(f, fp);
    if (res.is_zero()) return res;
    SparsePoly q = res.exact_divide(f.leading_coeff());
    // Content and sign normalization; the (-1)^{d(d-1)/2} factor is
    // absorbed by the trailing-term sign convention.
    return q.primitive_part();
}

}  // namespace ratmle
