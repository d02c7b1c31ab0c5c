#pragma once

#include "tate_oracle.hpp"

#include "isotwist/weierstrass.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

// Random integral models biased towards bad reduction at p: a_i = p^{e_i} * r_i with random
// exponents, occasionally scaled by u = p to produce non-minimal models.
Model random_model(std::mt19937_64& rng, long p, int coeff_bound = 60);

isotwist::AInvariants to_ainvariants(const Model& m);

// Kraus: (c4, c6) integral at p come from a p-integral model iff
// p = 3: v3(c6) != 2; p = 2: c6 = -1 (mod 4), or v2(c4) >= 4 and c6 = 0, 8 (mod 32).
bool kraus_realizable(const isotwist::Signature& s, long p);

// u_p of the twist of a p-minimal signature by d, computed with the Tate oracle on the
// integral model y^2 = x^3 - 27 c4' x - 54 c6' of the twisted signature (c4', c6').
isotwist::Rat tate_twist_scale(const isotwist::Signature& minimal, const mpz_class& d, long p);

// Minimal signatures at p drawn from random models and their quadratic twists. Each is
// integral at every prime, so it doubles as a global input for the Tate oracle.
std::vector<isotwist::Signature> sample_minimal(long p, int models, std::uint64_t seed);

// Minimal signatures grouped by the local table row they land on, sampling until every
// minimal row holds `per_row` entries or the model budget runs out.
std::map<int, std::vector<isotwist::Signature>> stratified_pool(long p, int per_row, std::uint64_t seed);

}  // namespace oracle
