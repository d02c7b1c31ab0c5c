#pragma once

#include "isotwist/exactnum.hpp"

#include <string>

namespace isotwist {

struct AInvariants {
    Rat a1, a2, a3, a4, a6;
};

struct BInvariants {
    Rat b2, b4, b6, b8;
};

BInvariants b_invariants(const AInvariants& a);

// Exact (c4, c6, delta) with delta != 0 and c4^3 - c6^2 = 1728 delta.
class Signature {
public:
    // Throws InputError when delta = 0 or the discriminant identity fails.
    Signature(Rat c4, Rat c6, Rat delta);

    // "c4,c6,delta" with each entry a rational string.
    static Signature parse(const std::string& text);

    const Rat& c4() const { return c4_; }
    const Rat& c6() const { return c6_; }
    const Rat& delta() const { return delta_; }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    Rat c4_, c6_, delta_;
};

// Valuations of (c4, c6, delta) at a fixed prime.
struct PSignature {
    Val vc4;
    Val vc6;
    Val vdelta;

    friend bool operator==(const PSignature&, const PSignature&) = default;
    std::string str() const;  // "(4,inf,10)"
};

AInvariants parse_ainvariants(const std::string& text);

Signature signature_of(const AInvariants& a);
PSignature p_signature(const Signature& s, long p);

// (c4/u^4, c6/u^6, delta/u^12)
Signature transform(const Signature& s, const Rat& u);

// (d^2 c4, d^3 c6, d^6 delta) for square-free d.
Signature twist_sig(const Signature& s, const mpz_class& d);

Rat j_invariant(const Signature& s);

// (0,0,0,A,B) with A = -c4/48, B = -c6/864.
AInvariants short_model(const Signature& s);

}  // namespace isotwist
