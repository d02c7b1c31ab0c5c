#pragma once

#include "isotwist/graphs.hpp"
#include "isotwist/weierstrass.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isotwist {

using Real = boost::multiprecision::mpfr_float;

constexpr unsigned kDefaultBits = 128;

struct LatticeApprox {
    Real volume;
    Real claimed_error;  // absolute
    unsigned bits;       // working precision that met the error target
};

// Covolume of the period lattice of dx/(2y) on y^2 = x^3 - c4/48 x - c6/864. Starts at `bits`
// and doubles the precision until two evaluations agree to 1e-12 relative; throws
// InternalError past 8192 bits. MPFR default precision is process-wide, so calls serialize.
LatticeApprox lattice_volume(const Signature& s, unsigned bits = kDefaultBits);

// u^2 * lattice_volume(s) with u the scale to the global minimal model.
Real neron_volume(const Signature& s, unsigned bits = kDefaultBits);

// -log(neron_volume) / 2.
Real faltings_height(const Signature& s, unsigned bits = kDefaultBits);

struct VertexHeight {
    std::string label;
    Signature twisted;  // twist of the family member, before minimalization
    Real neron_volume;
    Real faltings_height;
};

struct HeightReport {
    std::vector<VertexHeight> vertices;
    std::string argmin;
    std::string theorem_vertex;
    bool match = false;
    Real margin;  // largest Néron volume over the runner-up
    bool conclusive = true;
};

// Numeric Faltings-height argmin over the twist by d of a class with explicit models: L3(9) at
// t, or L2(11) class `variant` ('a' or 'b'). Compares against faltings_by_theorem.
HeightReport verify_class(const GraphType& g, const GraphParam& t, const mpz_class& d,
                          unsigned bits = kDefaultBits, char variant = 'a');

struct DensityReport {
    long bound;
    long squarefree;  // square-free n in [1, bound]
    long divisible;   // ... divisible by p
    double fraction_divisible;
    double density;  // squarefree / bound
};

DensityReport squarefree_density(long p, long bound);

struct EmpiricalReport {
    long samples;                       // square-free d with 1 <= |d| <= bound
    std::map<std::string, long> counts;  // by vertex
    std::map<std::string, double> frequencies;
};

EmpiricalReport empirical_prob(const GraphType& g, const GraphParam& t, long bound);

// Square-free flags for 0..bound (index 0 false).
std::vector<bool> squarefree_sieve(long bound);

}  // namespace isotwist
