#include "ratmle/disc_triple.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace ratmle {

namespace {

std::vector<std::vector<Rational>> to_rational(const IntMatrix& a) {
    std::vector<std::vector<Rational>> m;
    m.reserve(a.size());
    for (const auto& row : a) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const auto& z : row) r.emplace_back(z);
        m.push_back(std::move(r));
    }
    return m;
}

// Row echelon over Q in place; returns rank.
std::size_t echelon(std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace

const SparsePoly::Term& MarkedPoly::marked_term() const {
    if (marked_index >= delta.term_count())
        throw MarkedTermAbsent("marked term index out of range");
    return delta.terms()[marked_index];
}

std::size_t rational_rank(const IntMatrix& a) {
    auto m = to_rational(a);
    return echelon(m);
}

bool in_row_span(const IntMatrix& a, const std::vector<Rational>& v) {
    auto m = to_rational(a);
    std::size_t base = echelon(m);
    m.resize(base);
    m.push_back(v);
    return echelon(m) == base;
}

void validate_toric(const IntMatrix& a) {
    if (a.empty()) throw std::invalid_argument("toric matrix needs at least one row");
    std::size_t cols = a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("toric matrix rows of unequal length");
    if (rational_rank(a) != a.size()) throw std::invalid_argument("toric matrix rows are dependent");
    if (!in_row_span(a, std::vector<Rational>(cols, Rational(1))))
        throw OnesNotInRowSpan("all-ones vector is outside the row span");
}

HornPair pair_from_marked_poly(const MarkedPoly& mp) {
    const auto& [me, mc] = mp.marked_term();
    if (mp.delta.term_count() < 2)
        throw std::invalid_argument("polynomial needs at least two terms");
    std::size_t nv = mp.delta.nvars();
    HornPair pair;
    pair.H.entries.assign(nv, {});
    for (std::size_t l = 0; l < mp.delta.term_count(); ++l) {
        if (l == mp.marked_index) continue;
        const auto& [e, c] = mp.delta.terms()[l];
        for (std::size_t i = 0; i < nv; ++i) pair.H.entries[i].push_back(Integer(e[i] - me[i]));
        pair.lambda.push_back(-c / mc);
    }
    return pair;
}

MarkedPoly marked_poly_from_pair(const HornPair& pair) {
    std::size_t nv = pair.H.rows(), n = pair.lambda.size();
    if (nv == 0) throw std::invalid_argument("empty Horn matrix");
    Monomial m_exp(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        int mx = 0;
        for (std::size_t j = 0; j < n; ++j)
            mx = std::max(mx, -static_cast<int>(pair.H.entries[i][j].get_si()));
        m_exp[i] = mx;
    }
    std::vector<SparsePoly::Term> terms;
    terms.push_back({m_exp, Rational(1)});
    for (std::size_t j = 0; j < n; ++j) {
        Monomial e = m_exp;
        for (std::size_t i = 0; i < nv; ++i) e[i] += static_cast<int>(pair.H.entries[i][j].get_si());
        terms.push_back({std::move(e), -pair.lambda[j]});
    }
    MarkedPoly mp;
    mp.delta = SparsePoly::from_terms(nv, std::move(terms));
    // Locate the marked monomial in canonical order.
    bool found = false;
    for (std::size_t l = 0; l < mp.delta.term_count(); ++l)
        if (mp.delta.terms()[l].first == m_exp) {
            mp.marked_index = l;
            found = true;
            break;
        }
    if (!found) throw MarkedTermAbsent("marked monomial cancelled out of the polynomial");
    return mp;
}

IntMatrix left_kernel_basis(const HornMatrix& h) {
    std::size_t m = h.rows(), n = h.cols();
    IntMatrix work = h.entries;
    IntMatrix u(m, std::vector<Integer>(m, Integer(0)));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // Euclidean elimination below the pivot row.
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (work[i][c] != 0 &&
                    (best == m || cmp(abs(work[i][c]), abs(work[best][c])) < 0))
                    best = i;
            if (best == m) break;
            std::swap(work[r], work[best]);
            std::swap(u[r], u[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (work[i][c] == 0) continue;
                Integer q = work[i][c] / work[r][c];  // truncated division
                if (q != 0) {
                    for (std::size_t k = 0; k < n; ++k) work[i][k] -= q * work[r][k];
                    for (std::size_t k = 0; k < m; ++k) u[i][k] -= q * u[r][k];
                }
                if (work[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (work[r][c] != 0) ++r;
    }

    IntMatrix kernel;
    for (std::size_t i = r; i < m; ++i) {
        // Normalize: primitive with positive leading entry.
        std::vector<Integer> row = u[i];
        int first = 0;
        for (const auto& z : row)
            if (z != 0) {
                first = sgn(z);
                break;
            }
        if (first < 0)
            for (auto& z : row) z = -z;
        kernel.push_back(std::move(row));
    }
    if (kernel.empty()) throw OnesNotInRowSpan("left kernel is trivial");
    if (!in_row_span(kernel, std::vector<Rational>(m, Rational(1))))
        throw OnesNotInRowSpan("all-ones vector is outside the kernel row span");
    return kernel;
}

std::vector<Rational> monomial_map_eval(const MarkedPoly& mp, const std::vector<Rational>& x) {
    HornPair pair = pair_from_marked_poly(mp);
    std::size_t nv = pair.H.rows(), n = pair.lambda.size();
    if (x.size() != nv) throw std::invalid_argument("point length does not match variable count");
    std::vector<Rational> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational v = pair.lambda[j];
        for (std::size_t i = 0; i < nv; ++i) {
            long e = pair.H.entries[i][j].get_si();
            if (e == 0) continue;
            if (x[i] == 0) {
                if (e < 0) throw PoleAtInput("zero coordinate raised to a negative power");
                v = 0;
                break;
            }
            v *= pow_rational(x[i], e);
        }
        out[j] = v;
    }
    return out;
}

namespace {

bool constant_row_signs(const HornMatrix& h) {
    for (const auto& row : h.entries) {
        int seen = 0;
        for (const auto& z : row) {
            if (z == 0) continue;
            if (seen == 0)
                seen = sgn(z);
            else if (seen != sgn(z))
                return false;
        }
    }
    return true;
}

std::vector<int> row_sum_signs(const HornMatrix& h) {
    std::vector<int> sigma;
    sigma.reserve(h.rows());
    for (const auto& row : h.entries) {
        Integer s(0);
        for (const auto& z : row) s += z;
        sigma.push_back(sgn(s));
    }
    return sigma;
}

bool positive_at_ones(const HornPair& pair) {
    std::vector<Rational> ones(pair.lambda.size(), Rational(1));
    try {
        for (const auto& v : horn_map_eval(pair, ones))
            if (v <= 0) return false;
    } catch (const PoleAtInput&) {
        return false;
    }
    return true;
}

}  // namespace

TripleVerdict triple_check(const IntMatrix& a, const MarkedPoly& mp) {
    TripleVerdict v;
    v.pair = pair_from_marked_poly(mp);
    const HornMatrix& h = v.pair.H;
    std::size_t nv = h.rows(), n = h.cols();

    v.a_homogeneous = !a.empty();
    for (const auto& arow : a) {
        if (arow.size() != nv) {
            v.a_homogeneous = false;
            break;
        }
        for (std::size_t j = 0; j < n && v.a_homogeneous; ++j) {
            Integer s(0);
            for (std::size_t i = 0; i < nv; ++i) s += arow[i] * h.entries[i][j];
            if (s != 0) v.a_homogeneous = false;
        }
        if (!v.a_homogeneous) break;
    }
    for (std::size_t j = 0; j < n && v.a_homogeneous; ++j) {
        Integer s(0);
        for (std::size_t i = 0; i < nv; ++i) s += h.entries[i][j];
        if (s != 0) v.a_homogeneous = false;
    }

    v.reduced = is_reduced(h);
    v.constant_row_signs = constant_row_signs(h);
    v.sigma = row_sum_signs(h);
    if (v.constant_row_signs) {
        v.positive = true;
        for (std::size_t j = 0; j < n && v.positive; ++j) {
            int s = sgn(v.pair.lambda[j]);
            for (std::size_t i = 0; i < nv; ++i) {
                long e = h.entries[i][j].get_si();
                if (v.sigma[i] < 0 && (e % 2 != 0)) s = -s;
                if (v.sigma[i] == 0 && e != 0) s = 0;
            }
            if (s <= 0) v.positive = false;
        }
    }
    v.ok = v.a_homogeneous && v.reduced && v.constant_row_signs && v.positive;
    return v;
}

std::vector<ModelRecord> algorithm1_scan(const IntMatrix& a, const SparsePoly& delta,
                                         std::size_t jobs) {
    std::size_t nterms = delta.term_count();
    std::vector<ModelRecord> out;
    std::mutex out_mutex;

    auto check_term = [&](std::size_t l) {
        MarkedPoly mp{delta, l};
        HornPair red;
        try {
            red = reduce_horn(pair_from_marked_poly(mp));
        } catch (const std::invalid_argument&) {
            return;  // degenerate column data; the term cannot pass
        }
        if (!constant_row_signs(red.H)) return;
        if (!positive_at_ones(red)) return;
        ModelRecord rec;
        rec.term_index = l;
        rec.pair = std::move(red);
        rec.sigma = row_sum_signs(rec.pair.H);
        std::lock_guard<std::mutex> lock(out_mutex);
        out.push_back(std::move(rec));
    };

    if (jobs <= 1) {
        for (std::size_t l = 0; l < nterms; ++l) check_term(l);
    } else {
        std::vector<std::thread> workers;
        std::size_t next = 0;
        std::mutex next_mutex;
        for (std::size_t w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                while (true) {
                    std::size_t l;
                    {
                        std::lock_guard<std::mutex> lock(next_mutex);
                        if (next >= nterms) return;
                        l = next++;
                    }
                    check_term(l);
                }
            });
        for (auto& t : workers) t.join();
    }
    std::sort(out.begin(), out.end(),
              [](const ModelRecord& x, const ModelRecord& y) { return x.term_index < y.term_index; });
    (void)a;  // A-homogeneity is a precondition; zero column sums are
              // enforced by reduce_horn's validation above.
    return out;
}

}  // namespace ratmle
