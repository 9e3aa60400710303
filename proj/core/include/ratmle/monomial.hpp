#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace ratmle {

// Laurent exponent vector of fixed length (the ambient variable count).
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    std::size_t nvars() const { return exponents.size(); }
    int operator[](std::size_t i) const { return exponents[i]; }
    int& operator[](std::size_t i) { return exponents[i]; }

    long total_degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0L);
    }
    bool is_constant() const {
        for (int e : exponents)
            if (e != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += o.exponents[i];
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] -= o.exponents[i];
        return r;
    }
    // Divisibility in the polynomial (non-Laurent) sense.
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > o.exponents[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const = default;
};

// Graded lexicographic order, variables in index order.
// Returns <0, 0, >0 like a three-way comparison; "larger" monomials come
// first in the canonical descending term listing.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i] ? -1 : 1;
    return 0;
}

inline bool grlex_less(const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) < 0; }

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ m.exponents.size();
        for (int e : m.exponents) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(e)) + 0x9e3779b97f4a7c15ULL +
                 (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace ratmle
