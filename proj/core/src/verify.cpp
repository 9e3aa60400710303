#include "ratmle/verify.hpp"

#include <random>
#include <sstream>

namespace ratmle {

namespace {

std::vector<Rational> random_positive(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(1, 20), den(1, 6);
    std::vector<Rational> u(n);
    for (auto& q : u) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
    }
    return u;
}

// Scale a positive rational vector to integers by the lcm of denominators.
std::vector<Integer> integer_counts(const std::vector<Rational>& u) {
    Integer l(1);
    for (const auto& q : u) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> out;
    out.reserve(u.size());
    for (const auto& q : u) out.push_back(q.get_num() * (l / q.get_den()));
    return out;
}

Rational pow_rational_z(const Rational& x, const Integer& e) {
    if (!e.fits_slong_p()) throw std::invalid_argument("likelihood exponent too large");
    return pow_rational(x, e.get_si());
}

}  // namespace

int log_likelihood_compare(const std::vector<Rational>& p, const std::vector<Rational>& q,
                           const std::vector<Rational>& u) {
    if (p.size() != q.size() || p.size() != u.size())
        throw std::invalid_argument("likelihood comparison needs equal-length vectors");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (p[i] <= 0 || q[i] <= 0 || u[i] <= 0)
            throw std::invalid_argument("likelihood comparison needs positive vectors");
    std::vector<Integer> counts = integer_counts(u);
    Rational lp(1), lq(1);
    for (std::size_t i = 0; i < u.size(); ++i) {
        lp *= pow_rational_z(p[i], counts[i]);
        lq *= pow_rational_z(q[i], counts[i]);
    }
    return cmp(lp, lq);
}

std::vector<Rational> critical_gradient(const HornPair& pair, const std::vector<Rational>& u,
                                        const std::vector<Rational>& v) {
    validate_horn_input(pair.H, pair.lambda);
    std::size_t m = pair.H.rows(), n = pair.H.cols();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("point length does not match the column count");
    std::vector<Rational> hu(m, Rational(0)), hv(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational h(pair.H.entries[i][j]);
            hu[i] += h * u[j];
            hv[i] += h * v[j];
        }
    for (std::size_t i = 0; i < m; ++i)
        if (hv[i] == 0) throw PoleAtInput("linear form vanishes at the evaluation point");
    std::vector<Rational> grad(n, Rational(0));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < m; ++i)
            grad[l] += Rational(pair.H.entries[i][l]) * hu[i] / hv[i];
    return grad;
}

VerifyReport mle_idempotence_check(const HornPair& pair, std::uint64_t seed, std::size_t trials) {
    VerifyReport report;
    report.seed = seed;
    report.trials = trials;
    std::mt19937_64 rng(seed);
    std::size_t n = pair.H.cols();
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Rational> u = random_positive(rng, n);
        try {
            std::vector<Rational> p = horn_map_eval(pair, u);
            // Clear denominators so the re-applied input is a count vector.
            Integer l(1);
            for (const auto& q : p)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
            std::vector<Rational> scaled;
            scaled.reserve(n);
            for (const auto& q : p) scaled.push_back(q * Rational(l));
            if (horn_map_eval(pair, scaled) != p) {
                ++report.failures;
                std::ostringstream os;
                os << "idempotence failed at trial " << t;
                report.messages.push_back(os.str());
            }
        } catch (const PoleAtInput&) {
            // Non-generic sample; does not count against the check.
        }
    }
    return report;
}

VerifyReport verify_model(const HornPair& pair, std::uint64_t seed, std::size_t trials) {
    VerifyReport report;
    report.seed = seed;
    report.trials = trials;
    HornVerdict verdict = horn_pair_check(pair);
    if (!verdict.horn) {
        ++report.failures;
        report.messages.push_back(verdict.friendly ? "pair is friendly but not a Horn pair"
                                                   : "pair is not friendly");
        return report;
    }
    std::mt19937_64 rng(seed);
    std::size_t n = pair.H.cols();
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Rational> u = random_positive(rng, n);
        std::vector<Rational> p;
        try {
            p = horn_map_eval(pair, u);
        } catch (const PoleAtInput&) {
            continue;
        }
        Rational sum(0);
        bool open = true;
        for (const auto& q : p) {
            sum += q;
            if (q <= 0 || q >= 1) open = false;
        }
        if (!open || sum != 1) {
            ++report.failures;
            report.messages.push_back("image point outside the open simplex");
            continue;
        }
        for (const auto& g : critical_gradient(pair, u, u))
            if (g != 0) {
                ++report.failures;
                report.messages.push_back("nonzero gradient at v = u");
                break;
            }
        // Dominance over another model point.
        std::vector<Rational> w = random_positive(rng, n);
        try {
            std::vector<Rational> q = horn_map_eval(pair, w);
            bool positive = true;
            for (const auto& x : q) positive = positive && x > 0;
            if (positive && q != p && log_likelihood_compare(p, q, u) <= 0) {
                ++report.failures;
                report.messages.push_back("likelihood not maximized at the MLE");
            }
        } catch (const PoleAtInput&) {
        }
        // Idempotence on this sample.
        Integer l(1);
        for (const auto& q : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Rational> scaled;
        for (const auto& q : p) scaled.push_back(q * Rational(l));
        if (horn_map_eval(pair, scaled) != p) {
            ++report.failures;
            report.messages.push_back("idempotence failed");
        }
    }
    return report;
}

}  // namespace ratmle
