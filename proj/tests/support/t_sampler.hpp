#pragma once

#include "isotwist/graphs.hpp"

#include <random>
#include <string>
#include <vector>

namespace oracle {

// Random nonzero rational t with independently chosen valuations at the primes of g. For
// L2(2) and L2(3) some candidates are built as t = -s + p^k u to reach v_p(t + s) > v_p(s).
isotwist::Rat random_t(const isotwist::GraphType& g, std::mt19937_64& rng);

// n distinct admissible t satisfying every printed condition in `branches` (rejection sampling
// over random_t). Throws std::runtime_error if the branch is not hit.
std::vector<isotwist::Rat> sample_t(const isotwist::GraphType& g, const std::vector<std::string>& branches,
                                    std::size_t n, std::mt19937_64& rng);

// Square-free d with prescribed divisibility by each prime in `primes` (divisible[i] for
// primes[i]) and random sign; the cofactor is square-free, coprime to `primes` and below bound.
mpz_class sample_d(const std::vector<long>& primes, const std::vector<bool>& divisible, std::mt19937_64& rng,
                   long bound = 100000);

// Every combination of one printed row per rule sub-table of g.
std::vector<std::vector<std::string>> rule_branch_combinations(const isotwist::GraphType& g);

}  // namespace oracle
