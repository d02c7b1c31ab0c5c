#pragma once

#include "isotwist/exactnum.hpp"
#include "isotwist/weierstrass.hpp"

#include <map>
#include <string>
#include <utility>

namespace isotwist {

enum class KodairaKind { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct KodairaSymbol {
    KodairaKind kind = KodairaKind::I0;
    int n = 0;  // only meaningful for In and Instar

    static KodairaSymbol make(KodairaKind kind, int n = 0);  // normalizes I_0, I_0^*
    bool starred() const;
    std::string str() const;  // "I0", "I5", "II", "I0*", "I3*", "IV*"

    friend bool operator==(const KodairaSymbol&, const KodairaSymbol&) = default;
};

struct LocalClassification {
    long p = 0;
    Rat u_p{1};
    PSignature minimal_psig{0, 0, 0};
    KodairaSymbol kodaira;
    std::map<std::string, bool> conditions;  // labels "2a".."2g", "3a", "3b" that were evaluated
    std::string row;                         // pattern of the matched table row, e.g. "(>=4,3,0)"
    int row_index = -1;                      // position of that row in the table for p
};

// Whether a p-integral signature comes from a Weierstrass model with p-integral a-invariants.
bool realizable(const Signature& s, long p);

LocalClassification classify(const Signature& s, long p);

// One of the conditions "2a".."2g", "3a", "3b" evaluated on s. Only meaningful on the rows that
// reference it; throws InputError for an unknown label.
bool local_condition(const std::string& label, const Signature& s);

// Global minimal signature and the scale u with result = transform(s, u).
std::pair<Signature, Rat> global_minimal(const Signature& s);

// Pal value u_p of the twist of a p-minimal model by square-free d.
Rat pal_u(const LocalClassification& c, const Signature& minimal_sig, const mpz_class& d);

// The u_p(E^d) cell printed beside the matched row of the local tables.
Rat row_pal_u(const LocalClassification& c, const Signature& minimal_sig, const mpz_class& d);

// Product over all primes of pal_u for a global minimal signature.
Rat twist_scale(const Signature& minimal_sig, const mpz_class& d);

}  // namespace isotwist
