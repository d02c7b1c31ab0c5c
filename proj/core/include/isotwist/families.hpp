#pragma once

#include "isotwist/weierstrass.hpp"

#include <array>
#include <string>

namespace isotwist {

// ---- L3(9): the normalized chain E_1 -3- E_3 -3- E_9 over X_0(9) ----

// Signatures of (E_1, E_3, E_9) at the hauptmodul value t. Throws InputError at a cusp.
std::array<Signature, 3> l39_signatures(const Rat& t);

// Closed-form j(E_index)(t) for index 1, 3 or 9.
Rat l39_j(int index, const Rat& t);

// Fricke involution of X_0(9): t -> 27/t.
Rat fricke_w9(const Rat& t);

// ---- L2(11): the two rational isogeny classes over X_0(11) ----

struct LabeledCurve {
    std::string name;   // "E_1a", "E_11a", ...
    std::string label;  // "121.a2", ...
    AInvariants model;
    Signature signature;  // as printed
    Rat j;                // as printed
};

struct L211Class {
    char variant;  // 'a' or 'b'
    std::array<LabeledCurve, 2> curves;  // (E_1, E_11)
};

L211Class l211_class(char variant);

// The model y^2 + y = x^3 - x^2 - 10x - 20 of X_0(11).
bool on_x011(const Rat& x, const Rat& y);

// j-map on X_0(11) \ {x = 16}. The formula is 0/0 at (16, 60) and has a pole at (16, -61);
// both raise InputError. The value at (16, 60) is x011_j_16_60().
Rat x011_j(const Rat& x, const Rat& y);

// -11 * 131^3.
Rat x011_j_16_60();

}  // namespace isotwist
