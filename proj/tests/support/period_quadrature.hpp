#pragma once

#include "isotwist/weierstrass.hpp"

namespace oracle {

// Covolume of the period lattice of dx/(2y) on y^2 = x^3 + A x + B (A = -c4/48, B = -c6/864)
// by direct quadrature of the invariant differential along the real cycles, in long double.
long double quadrature_volume(const isotwist::Signature& s);

}  // namespace oracle
