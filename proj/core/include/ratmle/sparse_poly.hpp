#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ratmle/monomial.hpp"
#include "ratmle/rational.hpp"

namespace ratmle {

// Exact sparse multivariate Laurent polynomial over the rationals.
// Terms are kept in canonical graded lexicographic order, descending,
// with no zero coefficients stored.
class SparsePoly {
public:
    using Term = std::pair<Monomial, Rational>;

    SparsePoly() : nvars_(0) {}
    explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}
    SparsePoly(std::size_t nvars, const Rational& c);  // constant
    SparsePoly(Monomial m, Rational c);                // single term

    static SparsePoly from_terms(std::size_t nvars, std::vector<Term> terms);
    static SparsePoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // Canonical graded-lex order, largest first. Stable across runs.
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const { return terms_.front(); }
    const Term& trailing_term() const { return terms_.back(); }
    long total_degree() const;  // -1 for the zero polynomial

    bool operator==(const SparsePoly& o) const = default;

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly operator*(const Rational& c) const;
    SparsePoly mul_term(const Monomial& m, const Rational& c) const;

    // Exact value at a point; 0^0 == 1. Throws DivisionByZero when a
    // negative exponent meets a zero coordinate.
    Rational eval(const std::vector<Rational>& point) const;

    // Exact quotient; throws NotDivisible if the division leaves a remainder.
    SparsePoly exact_divide(const SparsePoly& divisor) const;

    // gcd of numerators over lcm of denominators; positive. Zero poly -> 0.
    Rational rational_content() const;
    // Entrywise minimum of the exponent vectors (the largest Laurent
    // monomial dividing every term).
    Monomial monomial_content() const;
    // Divide out rational and monomial content; sign chosen so the
    // trailing (graded-lex-minimal) term is positive.
    SparsePoly primitive_part() const;

    std::string to_string(const std::vector<std::string>& var_names) const;
    std::string to_string() const;  // default names x1..xn

private:
    std::size_t nvars_;
    std::vector<Term> terms_;
    void normalize();
};

inline SparsePoly operator*(const Rational& c, const SparsePoly& p) { return p * c; }

}  // namespace ratmle
