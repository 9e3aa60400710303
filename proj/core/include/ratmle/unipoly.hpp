#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "ratmle/sparse_poly.hpp"

namespace ratmle {

// Univariate polynomial in a distinguished variable t whose coefficients
// live in the multivariate ring carried by SparsePoly.
class UniPolyOverRing {
public:
    UniPolyOverRing() : nvars_(0) {}
    // coeffs[k] is the coefficient of t^k; trailing zero coefficients trimmed.
    UniPolyOverRing(std::size_t nvars, std::vector<SparsePoly> coeffs)
        : nvars_(nvars), coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const SparsePoly& coeff(std::size_t k) const { return coeffs_[k]; }
    const SparsePoly& leading_coeff() const { return coeffs_.back(); }
    const std::vector<SparsePoly>& coeffs() const { return coeffs_; }

    UniPolyOverRing derivative() const {
        if (coeffs_.size() <= 1) return UniPolyOverRing(nvars_, {});
        std::vector<SparsePoly> d;
        d.reserve(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
        return UniPolyOverRing(nvars_, std::move(d));
    }

    // f(t) = sum_i  x_{var_index[i]} * t^{exp[i]}  -- the sparse supports used
    // by the scan families.
    static UniPolyOverRing sparse_support(std::size_t nvars, const std::vector<int>& exps,
                                          const std::vector<std::size_t>& var_index) {
        assert(exps.size() == var_index.size());
        int maxd = 0;
        for (int e : exps) maxd = std::max(maxd, e);
        std::vector<SparsePoly> c(static_cast<std::size_t>(maxd) + 1, SparsePoly(nvars));
        for (std::size_t i = 0; i < exps.size(); ++i)
            c[static_cast<std::size_t>(exps[i])] += SparsePoly::variable(nvars, var_index[i]);
        return UniPolyOverRing(nvars, std::move(c));
    }

private:
    std::size_t nvars_;
    std::vector<SparsePoly> coeffs_;
};

}  // namespace ratmle
