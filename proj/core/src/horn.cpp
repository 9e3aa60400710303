#include "ratmle/horn.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ratmle {

namespace {

long to_long(const Integer& z) { return z.get_si(); }

Rational integer_pow(const Integer& base, long e) { return pow_rational(Rational(base), e); }

// Multiplier c with row == c * primitive; primitive has a positive first
// nonzero entry, so c carries the row's sign and scale.
Integer row_multiplier(const std::vector<Integer>& row, const std::vector<Integer>& primitive) {
    for (std::size_t k = 0; k < row.size(); ++k)
        if (primitive[k] != 0) return row[k] / primitive[k];
    return Integer(0);
}

SparsePoly linear_form(const std::vector<Integer>& row) {
    std::vector<SparsePoly::Term> ts;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] == 0) continue;
        Monomial m(row.size());
        m[k] = 1;
        ts.push_back({std::move(m), Rational(row[k])});
    }
    return SparsePoly::from_terms(row.size(), std::move(ts));
}

SparsePoly poly_pow(const SparsePoly& base, long e, std::vector<SparsePoly>& cache) {
    while (static_cast<long>(cache.size()) <= e) {
        if (cache.empty())
            cache.push_back(SparsePoly(base.nvars(), Rational(1)));
        else
            cache.push_back(cache.back() * base);
    }
    return cache[static_cast<std::size_t>(e)];
}

}  // namespace

void validate_horn_input(const HornMatrix& H, const std::vector<Rational>& lambda) {
    if (H.rows() == 0) throw std::invalid_argument("Horn matrix needs at least one row");
    std::size_t n = H.cols();
    for (const auto& row : H.entries)
        if (row.size() != n) throw std::invalid_argument("Horn matrix rows have unequal lengths");
    if (!H.row_labels.empty() && H.row_labels.size() != H.rows())
        throw std::invalid_argument("row label count does not match row count");
    for (std::size_t j = 0; j < n; ++j) {
        Integer s(0);
        for (const auto& row : H.entries) s += row[j];
        if (s != 0)
            throw std::invalid_argument("column " + std::to_string(j + 1) + " sums to " +
                                        s.get_str());
    }
    if (lambda.size() != n)
        throw std::invalid_argument("coefficient vector length does not match column count");
    for (const auto& l : lambda)
        if (l == 0) throw std::invalid_argument("coefficient vector has a zero entry");
}

bool is_zero_row(const std::vector<Integer>& row) {
    return std::all_of(row.begin(), row.end(), [](const Integer& z) { return z == 0; });
}

std::vector<Integer> primitive_row(const std::vector<Integer>& row) {
    Integer g(0);
    for (const auto& z : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    std::vector<Integer> r = row;
    int first_sign = 0;
    for (const auto& z : row)
        if (z != 0) {
            first_sign = sgn(z);
            break;
        }
    if (first_sign < 0) g = -g;
    for (auto& z : r) z /= g;
    return r;
}

bool is_reduced(const HornMatrix& H) {
    std::vector<std::vector<Integer>> prims;
    for (const auto& row : H.entries) {
        if (is_zero_row(row)) return false;
        prims.push_back(primitive_row(row));
    }
    for (std::size_t i = 0; i < prims.size(); ++i)
        for (std::size_t k = i + 1; k < prims.size(); ++k)
            if (prims[i] == prims[k]) return false;
    return true;
}

std::vector<Rational> horn_map_eval(const HornPair& pair, const std::vector<Rational>& u) {
    const auto& H = pair.H.entries;
    std::size_t m = H.size(), n = pair.lambda.size();
    if (m > 0 && pair.H.cols() != n)
        throw std::invalid_argument("matrix column count does not match lambda length");
    if (u.size() != n) throw std::invalid_argument("point length does not match column count");
    std::vector<Rational> forms(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) forms[i] += Rational(H[i][k]) * u[k];
    std::vector<Rational> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational v = pair.lambda[j];
        for (std::size_t i = 0; i < m; ++i) {
            long e = to_long(H[i][j]);
            if (e == 0) continue;
            if (forms[i] == 0) {
                if (e < 0) throw PoleAtInput("vanishing linear form with negative exponent");
                v = 0;
                break;
            }
            v *= pow_rational(forms[i], e);
        }
        out[j] = v;
    }
    return out;
}

bool friendliness_check(const HornMatrix& H, const std::vector<Rational>& lambda,
                        long expansion_degree_limit) {
    validate_horn_input(H, lambda);
    std::size_t m = H.rows(), n = H.cols();
    std::vector<long> d(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i] = std::max(d[i], -to_long(H.entries[i][j]));
    long total_degree = std::accumulate(d.begin(), d.end(), 0L);

    // Grid size for the evaluation fallback; if it explodes, expansion is
    // still a complete (if slower) decision procedure.
    bool use_expansion = total_degree <= expansion_degree_limit;
    if (!use_expansion) {
        double pts = 1;
        for (std::size_t k = 0; k < n && pts < 4e6; ++k) pts *= static_cast<double>(total_degree + 2);
        if (pts >= 4e6) use_expansion = true;
    }

    if (use_expansion) {
        std::vector<SparsePoly> forms;
        forms.reserve(m);
        for (const auto& row : H.entries) forms.push_back(linear_form(row));
        std::vector<std::vector<SparsePoly>> pow_cache(m);
        SparsePoly lhs(n);
        for (std::size_t j = 0; j < n; ++j) {
            SparsePoly prod(n, lambda[j]);
            for (std::size_t i = 0; i < m; ++i) {
                long e = to_long(H.entries[i][j]) + d[i];
                if (e > 0) prod = prod * poly_pow(forms[i], e, pow_cache[i]);
            }
            lhs += prod;
        }
        SparsePoly rhs(n, Rational(1));
        for (std::size_t i = 0; i < m; ++i)
            if (d[i] > 0) rhs = rhs * poly_pow(forms[i], d[i], pow_cache[i]);
        return lhs == rhs;
    }

    // Deterministic grid: per-variable degree is bounded by the total
    // degree, so total_degree + 2 points per variable decide the identity.
    std::vector<long> point(n, 1);
    const long lo = 1, hi = total_degree + 2;
    while (true) {
        std::vector<Integer> w(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < n; ++k) w[i] += H.entries[i][k] * point[k];
        Rational val(0);
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = lambda[j];
            for (std::size_t i = 0; i < m; ++i) {
                long e = to_long(H.entries[i][j]) + d[i];
                if (e > 0) v *= integer_pow(w[i], e);
            }
            val += v;
        }
        Rational rhs(1);
        for (std::size_t i = 0; i < m; ++i)
            if (d[i] > 0) rhs *= integer_pow(w[i], d[i]);
        if (val != rhs) return false;
        std::size_t k = 0;
        while (k < n && point[k] == hi) point[k++] = lo;
        if (k == n) break;
        ++point[k];
    }
    return true;
}

HornPair reduce_horn(const HornPair& pair) {
    validate_horn_input(pair.H, pair.lambda);
    std::size_t m = pair.H.rows(), n = pair.H.cols();
    bool labeled = !pair.H.row_labels.empty();

    struct Group {
        std::vector<Integer> primitive;
        std::vector<Integer> multipliers;
        std::vector<std::string> labels;
    };
    std::vector<Group> groups;
    std::map<std::vector<Integer>, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = pair.H.entries[i];
        if (is_zero_row(row)) continue;  // exponent zero everywhere: factor 1
        auto prim = primitive_row(row);
        auto it = index.find(prim);
        if (it == index.end()) {
            index.emplace(prim, groups.size());
            groups.push_back({prim, {}, {}});
            it = index.find(prim);
        }
        Group& g = groups[it->second];
        g.multipliers.push_back(row_multiplier(row, prim));
        if (labeled) g.labels.push_back(pair.H.row_labels[i]);
    }

    HornPair out;
    out.lambda = pair.lambda;
    for (const auto& g : groups) {
        Integer s = std::accumulate(g.multipliers.begin(), g.multipliers.end(), Integer(0));
        for (std::size_t j = 0; j < n; ++j) {
            long rj = to_long(g.primitive[j]);
            if (rj == 0) continue;
            Rational factor(1);
            for (const auto& c : g.multipliers) factor *= integer_pow(c, to_long(c) * rj);
            if (s != 0) factor /= integer_pow(s, to_long(s) * rj);
            out.lambda[j] *= factor;
        }
        if (s == 0) continue;  // group cancels; rows deleted outright
        std::vector<Integer> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = s * g.primitive[j];
        out.H.entries.push_back(std::move(row));
        if (labeled) {
            std::string lab = g.labels.empty() ? std::string() : g.labels[0];
            for (std::size_t k = 1; k < g.labels.size(); ++k) lab += "+" + g.labels[k];
            out.H.row_labels.push_back(std::move(lab));
        }
    }
    // The output may legitimately be empty (all groups cancel); the map is
    // then the constant lambda-tilde.
    return out;
}

HornVerdict horn_pair_check(const HornPair& pair) {
    validate_horn_input(pair.H, pair.lambda);
    HornVerdict v;
    std::size_t m = pair.H.rows(), n = pair.H.cols();
    v.sigma.resize(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        Integer s = std::accumulate(pair.H.entries[i].begin(), pair.H.entries[i].end(), Integer(0));
        v.sigma[i] = sgn(s);
    }
    v.friendly = friendliness_check(pair.H, pair.lambda);
    if (!v.friendly) return v;
    if (!is_reduced(pair.H)) return v;
    for (const auto& row : pair.H.entries) {
        int seen = 0;
        for (const auto& z : row) {
            if (z == 0) continue;
            if (seen == 0)
                seen = sgn(z);
            else if (seen != sgn(z))
                return v;
        }
    }
    // Friendly + reduced + constant row signs: positivity at the all-ones
    // point decides positivity on the whole positive orthant.
    std::vector<Rational> ones(n, Rational(1));
    std::vector<Rational> img;
    try {
        img = horn_map_eval(pair, ones);
    } catch (const PoleAtInput&) {
        return v;
    }
    for (const auto& x : img)
        if (x <= 0) return v;
    v.horn = true;
    return v;
}

bool horn_pair_equal(const HornPair& p1, const HornPair& p2,
                     const std::optional<std::vector<std::size_t>>& column_bijection) {
    std::size_t m = p1.H.rows(), n = p1.H.cols();
    if (p2.H.rows() != m || p2.H.cols() != n) return false;

    auto matches = [&](const std::vector<std::size_t>& bij) {
        for (std::size_t j = 0; j < n; ++j)
            if (p1.lambda[j] != p2.lambda[bij[j]]) return false;
        std::vector<std::vector<Integer>> r1, r2 = p2.H.entries;
        r1.reserve(m);
        for (const auto& row : p1.H.entries) {
            std::vector<Integer> pr(n);
            for (std::size_t j = 0; j < n; ++j) pr[bij[j]] = row[j];
            r1.push_back(std::move(pr));
        }
        std::sort(r1.begin(), r1.end());
        std::sort(r2.begin(), r2.end());
        return r1 == r2;
    };

    if (column_bijection) {
        if (column_bijection->size() != n)
            throw std::invalid_argument("column bijection length does not match");
        return matches(*column_bijection);
    }
    if (n > 16) throw SearchBudgetExceeded("column bijection search limited to 16 columns");

    // Per-column invariant: the lambda value and the sorted column entries.
    auto column_key = [n](const HornPair& p, std::size_t j) {
        std::vector<Integer> col;
        col.reserve(p.H.rows());
        for (const auto& row : p.H.entries) col.push_back(row[j]);
        std::sort(col.begin(), col.end());
        return std::make_pair(p.lambda[j], col);
    };
    std::vector<std::vector<std::size_t>> candidates(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto k1 = column_key(p1, j);
        for (std::size_t l = 0; l < n; ++l)
            if (k1 == column_key(p2, l)) candidates[j].push_back(l);
        if (candidates[j].empty()) return false;
    }
    std::vector<std::size_t> bij(n, 0);
    std::vector<bool> used(n, false);
    long budget = 2000000;
    auto rec = [&](auto&& self, std::size_t j) -> bool {
        if (j == n) return matches(bij);
        for (std::size_t l : candidates[j]) {
            if (used[l]) continue;
            if (--budget <= 0) throw SearchBudgetExceeded("column bijection search budget exhausted");
            used[l] = true;
            bij[j] = l;
            if (self(self, j + 1)) return true;
            used[l] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace ratmle
