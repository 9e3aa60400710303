#include "ratmle/families.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "ratmle/resultant.hpp"

namespace ratmle {

namespace {

long gcd3(long a, long b, long c) { return std::gcd(std::gcd(a, b), c); }

// Run `make(i)` for i in [0, n) over `jobs` threads, preserving index order.
template <typename Make>
std::vector<FamilyInstance> run_instances(std::size_t n, std::size_t jobs, Make make) {
    std::vector<FamilyInstance> out(n);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = make(i);
        return out;
    }
    std::mutex next_mutex;
    std::size_t next = 0;
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            while (true) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> lock(next_mutex);
                    if (next >= n) return;
                    i = next++;
                }
                out[i] = make(i);
            }
        });
    for (auto& t : workers) t.join();
    return out;
}

// Exponent vectors of total degree d in four variables, ascending lex.
std::vector<std::vector<int>> degree_monomials(long d) {
    std::vector<std::vector<int>> out;
    for (int e1 = 0; e1 <= d; ++e1)
        for (int e2 = 0; e2 + e1 <= d; ++e2)
            for (int e3 = 0; e3 + e2 + e1 <= d; ++e3)
                out.push_back({e1, e2, e3, static_cast<int>(d) - e1 - e2 - e3});
    std::sort(out.begin(), out.end());
    return out;
}

bool disjoint_support(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

bool coprime_support(const std::vector<int>& a, const std::vector<int>& b,
                     const std::vector<int>& c) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0 && c[i] > 0) return false;
    return true;
}

SparsePoly simplex_multiple(const std::vector<std::pair<std::vector<int>, long>>& multiplier) {
    SparsePoly simplex(4);
    for (std::size_t i = 0; i < 4; ++i) simplex += SparsePoly::variable(4, i);
    SparsePoly m(4);
    for (const auto& [e, c] : multiplier) m += SparsePoly(Monomial(e), Rational(c));
    return m * simplex;
}

std::string monomial_label(const std::vector<int>& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace

std::size_t ScanReport::total_terms() const {
    std::size_t s = 0;
    for (const auto& inst : instances) s += inst.n_terms();
    return s;
}

std::size_t ScanReport::total_models() const {
    std::size_t s = 0;
    for (const auto& inst : instances) s += inst.models.size();
    return s;
}

Rational ScanReport::pass_fraction() const {
    std::size_t t = total_terms();
    if (t == 0) return Rational(0);
    Rational f(static_cast<long>(total_models()), static_cast<long>(t));
    f.canonicalize();
    return f;
}

std::vector<std::vector<long>> univariate_params(long bound) {
    std::vector<std::vector<long>> out;
    for (long a = 1; a <= bound; ++a)
        for (long b = a + 1; b <= bound; ++b)
            for (long c = b + 1; c <= bound; ++c)
                if (gcd3(a, b, c) == 1) out.push_back({a, b, c});
    return out;
}

FamilyInstance univariate_instance(long alpha, long beta, long gamma) {
    FamilyInstance inst;
    inst.params = {alpha, beta, gamma};
    {
        std::ostringstream os;
        os << "univariate(" << alpha << "," << beta << "," << gamma << ")";
        inst.label = os.str();
    }
    inst.a = {{Integer(1), Integer(1), Integer(1), Integer(1)},
              {Integer(0), Integer(alpha), Integer(beta), Integer(gamma)}};
    UniPolyOverRing f = UniPolyOverRing::sparse_support(
        4, {0, static_cast<int>(alpha), static_cast<int>(beta), static_cast<int>(gamma)},
        {0, 1, 2, 3});
    inst.delta = discriminant_t(f);
    inst.models = algorithm1_scan(inst.a, inst.delta);
    return inst;
}

ScanReport univariate_family_scan(long bound, std::size_t jobs) {
    auto params = univariate_params(bound);
    ScanReport report;
    report.instances = run_instances(params.size(), jobs, [&](std::size_t i) {
        return univariate_instance(params[i][0], params[i][1], params[i][2]);
    });
    return report;
}

std::vector<std::vector<long>> trinomial_params(long bound) {
    std::vector<std::vector<long>> pairs;
    for (long b = 2; b <= bound; ++b)
        for (long a = 1; a < b; ++a)
            if (std::gcd(a, b) == 1) pairs.push_back({a, b});
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::vector<long>> out;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i; j < pairs.size(); ++j)
            out.push_back({pairs[i][0], pairs[i][1], pairs[j][0], pairs[j][1]});
    return out;
}

FamilyInstance trinomial_instance(long alpha, long beta, long gamma, long epsilon) {
    FamilyInstance inst;
    inst.params = {alpha, beta, gamma, epsilon};
    {
        std::ostringstream os;
        os << "trinomial(" << alpha << "," << beta << ";" << gamma << "," << epsilon << ")";
        inst.label = os.str();
    }
    inst.a = {{Integer(0), Integer(alpha), Integer(beta), Integer(0), Integer(gamma),
               Integer(epsilon)},
              {Integer(0), Integer(0), Integer(0), Integer(1), Integer(1), Integer(1)},
              {Integer(1), Integer(1), Integer(1), Integer(1), Integer(1), Integer(1)}};
    UniPolyOverRing f = UniPolyOverRing::sparse_support(
        6, {0, static_cast<int>(alpha), static_cast<int>(beta)}, {0, 1, 2});
    UniPolyOverRing g = UniPolyOverRing::sparse_support(
        6, {0, static_cast<int>(gamma), static_cast<int>(epsilon)}, {3, 4, 5});
    inst.delta = sylvester_resultant(f, g).primitive_part();
    inst.models = algorithm1_scan(inst.a, inst.delta);
    return inst;
}

ScanReport trinomial_family_scan(long bound, std::size_t jobs) {
    auto params = trinomial_params(bound);
    ScanReport report;
    report.instances = run_instances(params.size(), jobs, [&](std::size_t i) {
        return trinomial_instance(params[i][0], params[i][1], params[i][2], params[i][3]);
    });
    return report;
}

std::vector<FamilyInstance> linear_multiple_instances(MultiplierShape shape, MultiplierSign sign,
                                                      long max_degree) {
    std::vector<FamilyInstance> out;
    const char* op = sign == MultiplierSign::plus ? "+" : "-";
    for (long d = 1; d <= max_degree; ++d) {
        auto mons = degree_monomials(d);
        if (shape == MultiplierShape::binomial) {
            for (std::size_t i = 0; i < mons.size(); ++i)
                for (std::size_t j = i + 1; j < mons.size(); ++j) {
                    if (!disjoint_support(mons[i], mons[j])) continue;
                    FamilyInstance inst;
                    inst.label = "(" + monomial_label(mons[i]) + op + monomial_label(mons[j]) +
                                 ")*simplex";
                    for (int e : mons[i]) inst.params.push_back(e);
                    for (int e : mons[j]) inst.params.push_back(e);
                    inst.a = {{Integer(1), Integer(1), Integer(1), Integer(1)}};
                    inst.delta = simplex_multiple(
                        {{mons[i], 1}, {mons[j], sign == MultiplierSign::plus ? 1 : -1}});
                    out.push_back(std::move(inst));
                }
        } else {
            for (std::size_t i = 0; i < mons.size(); ++i)
                for (std::size_t j = i + 1; j < mons.size(); ++j)
                    for (std::size_t k = j + 1; k < mons.size(); ++k) {
                        if (!coprime_support(mons[i], mons[j], mons[k])) continue;
                        FamilyInstance inst;
                        // Mixed sign: the minus goes on the lex-smallest
                        // exponent vector, mons[i].
                        if (sign == MultiplierSign::plus)
                            inst.label = "(" + monomial_label(mons[i]) + "+" +
                                         monomial_label(mons[j]) + "+" + monomial_label(mons[k]) +
                                         ")*simplex";
                        else
                            inst.label = "(" + monomial_label(mons[j]) + "+" +
                                         monomial_label(mons[k]) + "-" + monomial_label(mons[i]) +
                                         ")*simplex";
                        for (int e : mons[i]) inst.params.push_back(e);
                        for (int e : mons[j]) inst.params.push_back(e);
                        for (int e : mons[k]) inst.params.push_back(e);
                        inst.a = {{Integer(1), Integer(1), Integer(1), Integer(1)}};
                        inst.delta = simplex_multiple(
                            {{mons[i], sign == MultiplierSign::plus ? 1 : -1},
                             {mons[j], 1},
                             {mons[k], 1}});
                        out.push_back(std::move(inst));
                    }
        }
    }
    return out;
}

ScanReport linear_multiple_scan(MultiplierShape shape, MultiplierSign sign, long max_degree,
                                std::size_t jobs) {
    auto instances = linear_multiple_instances(shape, sign, max_degree);
    ScanReport report;
    report.instances = run_instances(instances.size(), jobs, [&](std::size_t i) {
        FamilyInstance inst = std::move(instances[i]);
        inst.models = algorithm1_scan(inst.a, inst.delta);
        return inst;
    });
    return report;
}

}  // namespace ratmle
