#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ratmle/horn.hpp"

namespace ratmle {

// Exact comparison of likelihoods L_u(p) vs L_u(q): scales u to integer
// counts and compares prod p_i^{U_i} with prod q_i^{U_i}. Returns -1, 0,
// or 1 like a three-way comparison. Requires positive p, q, u.
int log_likelihood_compare(const std::vector<Rational>& p, const std::vector<Rational>& q,
                           const std::vector<Rational>& u);

// Entry l: sum over rows i of H[i][l] * (Hu)_i / (Hv)_i -- the gradient of
// the likelihood at v divided by its value. Zero at v = u because the
// columns of H sum to zero. Throws PoleAtInput when some (Hv)_i = 0.
std::vector<Rational> critical_gradient(const HornPair& pair, const std::vector<Rational>& u,
                                        const std::vector<Rational>& v);

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;  // one per failed check

    bool ok() const { return failures == 0; }
};

// Phi(Phi(u) * N) == Phi(u) for N clearing denominators, over `trials`
// seeded random positive count vectors.
VerifyReport mle_idempotence_check(const HornPair& pair, std::uint64_t seed, std::size_t trials);

// Full model verification: horn_pair_check verdict, idempotence,
// critical_gradient(u, u) = 0, image in the open simplex, and likelihood
// dominance of Phi(u) over sampled model points.
VerifyReport verify_model(const HornPair& pair, std::uint64_t seed, std::size_t trials);

}  // namespace ratmle
