#include "ratmle/sparse_poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

namespace ratmle {

SparsePoly::SparsePoly(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace_back(Monomial(nvars), c);
}

SparsePoly::SparsePoly(Monomial m, Rational c) : nvars_(m.nvars()) {
    if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m[index] = 1;
    return SparsePoly(std::move(m), Rational(1));
}

void SparsePoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.first, b.first) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.second == 0; }),
              out.end());
    terms_ = std::move(out);
}

SparsePoly SparsePoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    SparsePoly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

long SparsePoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Terms are grlex-sorted, so the leading term carries the max degree.
    return terms_.front().first.total_degree();
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    assert(nvars_ == o.nvars_);
    SparsePoly r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        int c = grlex_cmp(a->first, b->first);
        if (c > 0) {
            r.terms_.push_back(*a++);
        } else if (c < 0) {
            r.terms_.push_back(*b++);
        } else {
            Rational s = a->second + b->second;
            if (s != 0) r.terms_.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    *this = *this + o;
    return *this;
}
SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    *this = *this - o;
    return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    assert(nvars_ == o.nvars_);
    if (is_zero() || o.is_zero()) return SparsePoly(nvars_);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2 + 4);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
    SparsePoly r(nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.first, b.first) > 0; });
    return r;
}

SparsePoly SparsePoly::operator*(const Rational& c) const {
    if (c == 0) return SparsePoly(nvars_);
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

SparsePoly SparsePoly::mul_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return SparsePoly(nvars_);
    SparsePoly r = *this;
    for (auto& t : r.terms_) {
        t.first = t.first * m;
        t.second *= c;
    }
    return r;
}

Rational SparsePoly::eval(const std::vector<Rational>& point) const {
    assert(point.size() == nvars_);
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            int e = m[i];
            if (e == 0) continue;  // 0^0 == 1 convention
            if (point[i] == 0 && e < 0)
                throw DivisionByZero("negative exponent at a zero coordinate");
            v *= pow_rational(point[i], e);
        }
        acc += v;
    }
    return acc;
}

SparsePoly SparsePoly::exact_divide(const SparsePoly& divisor) const {
    assert(nvars_ == divisor.nvars_);
    if (divisor.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (is_zero()) return SparsePoly(nvars_);

    // Strip the full monomial content from both operands. In a domain the
    // per-variable minimum degree is additive under multiplication, so an
    // exact Laurent quotient becomes an ordinary polynomial quotient with
    // content zero, and the content difference is restored at the end.
    Monomial shift_n = monomial_content();
    Monomial shift_d = divisor.monomial_content();
    Monomial neg_n = Monomial(nvars_) / shift_n, neg_d = Monomial(nvars_) / shift_d;
    SparsePoly num = mul_term(neg_n, Rational(1));
    SparsePoly den = divisor.mul_term(neg_d, Rational(1));

    const auto& [dm, dc] = den.leading_term();
    SparsePoly q(nvars_);
    SparsePoly r = num;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading_term();
        if (!dm.divides(rm)) throw NotDivisible("leading term not divisible");
        Monomial qm = rm / dm;
        Rational qc = rc / dc;
        q.terms_.emplace_back(qm, qc);
        r -= den.mul_term(qm, qc);
    }
    q.normalize();
    // Undo the shifts: quotient picks up shift_n - shift_d.
    Monomial undo = shift_n / shift_d;
    if (!undo.is_constant()) q = q.mul_term(undo, Rational(1));
    return q;
}

Rational SparsePoly::rational_content() const {
    if (is_zero()) return Rational(0);
    Integer g(0), l(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpq_numref(c.get_mpq_t()));
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(c.get_mpq_t()));
    }
    Rational r(g, l);
    r.canonicalize();
    return r;
}

Monomial SparsePoly::monomial_content() const {
    Monomial m(nvars_);
    if (is_zero()) return m;
    m = terms_.front().first;
    for (const auto& [tm, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], tm[i]);
    return m;
}

SparsePoly SparsePoly::primitive_part() const {
    if (is_zero()) return *this;
    Rational c = rational_content();
    if (trailing_term().second < 0) c = -c;
    Monomial mc = monomial_content();
    SparsePoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, coeff] : terms_) r.terms_.emplace_back(m / mc, coeff / c);
    return r;
}

std::string SparsePoly::to_string(const std::vector<std::string>& var_names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (a != 1 || m.is_constant()) {
            os << ratmle::to_string(a);
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (printed_coeff) os << "*";
            os << var_names[i];
            if (m[i] != 1) os << "^" << m[i];
            printed_coeff = true;
        }
    }
    return os.str();
}

std::string SparsePoly::to_string() const {
    std::vector<std::string> names;
    names.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) names.push_back("x" + std::to_string(i + 1));
    return to_string(names);
}

std::string to_decimal(const Rational& q, int significant_digits) {
    if (q == 0) return "0";
    mpf_class f(q, 64 + static_cast<unsigned>(significant_digits) * 4);
    mp_exp_t exp;
    std::string digits = f.get_str(exp, 10, static_cast<std::size_t>(significant_digits));
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits.erase(digits.begin());
    }
    std::ostringstream os;
    if (neg) os << "-";
    if (exp <= 0) {
        os << "0.";
        for (mp_exp_t i = 0; i < -exp; ++i) os << "0";
        os << digits;
    } else if (static_cast<std::size_t>(exp) >= digits.size()) {
        os << digits;
        for (std::size_t i = digits.size(); i < static_cast<std::size_t>(exp); ++i) os << "0";
    } else {
        os << digits.substr(0, static_cast<std::size_t>(exp)) << "."
           << digits.substr(static_cast<std::size_t>(exp));
    }
    return os.str();
}

}  // namespace ratmle
