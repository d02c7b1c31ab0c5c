#include "isotwist/families.hpp"

#include "isotwist/errors.hpp"

#include <initializer_list>

namespace isotwist {

namespace {

// Coefficients from the constant term up.
Rat poly(std::initializer_list<long> coeffs, const Rat& t) {
    Rat acc(0);
    for (auto it = std::rbegin(coeffs); it != std::rend(coeffs); ++it) acc = acc * t + Rat(*it);
    return acc;
}

void check_l39(const Rat& t) {
    if (t.is_zero()) throw InputError("t=0 is a cusp");
    if (poly({27, 9, 1}, t).is_zero()) throw InputError("t is a cusp: t^2 + 9t + 27 = 0");
}

}  // namespace

std::array<Signature, 3> l39_signatures(const Rat& t) {
    check_l39(t);
    const Rat q = poly({27, 9, 1}, t);  // t^2 + 9t + 27
    const Signature e1(poly({3, 1}, t) * poly({3, 27, 9, 1}, t),
                       poly({-27, 486, 891, 504, 135, 18, 1}, t),
                       t * q);
    const Signature e3(poly({3, 1}, t) * poly({9, 1}, t) * poly({27, 0, 1}, t),
                       poly({-27, 0, 1}, t) * poly({729, 486, 162, 18, 1}, t),
                       t.pow(3) * q.pow(3));
    const Signature e9(poly({9, 1}, t) * poly({6561, 2187, 243, 1}, t),
                       poly({-14348907, -9565938, -2657205, -367416, -24057, -486, 1}, t),
                       t.pow(9) * q);
    return {e1, e3, e9};
}

Rat l39_j(int index, const Rat& t) {
    check_l39(t);
    const Rat q = poly({27, 9, 1}, t);
    switch (index) {
        case 1: return (poly({3, 1}, t) * poly({3, 27, 9, 1}, t)).pow(3) / (t * q);
        // The printed numerator lacks the factor (t^2 + 27)^3; without it j(E_3) != c4^3/delta.
        case 3: return (poly({3, 1}, t) * poly({9, 1}, t) * poly({27, 0, 1}, t)).pow(3) / (t * q).pow(3);
        case 9: return (poly({9, 1}, t) * poly({6561, 2187, 243, 1}, t)).pow(3) / (t.pow(9) * q);
        default: throw InputError("L3(9) index must be 1, 3 or 9, got " + std::to_string(index));
    }
}

Rat fricke_w9(const Rat& t) {
    if (t.is_zero()) throw InputError("t=0 is a cusp");
    return Rat(27) / t;
}

L211Class l211_class(char variant) {
    auto curve = [](std::string name, std::string label, std::initializer_list<long> a, Rat c4, Rat c6, Rat delta,
                    Rat j) {
        const auto* p = a.begin();
        return LabeledCurve{std::move(name), std::move(label), AInvariants{p[0], p[1], p[2], p[3], p[4]},
                            Signature(std::move(c4), std::move(c6), std::move(delta)), std::move(j)};
    };
    const Rat e11 = 11;
    switch (variant) {
        case 'a':
            return {'a',
                    {curve("E_1a", "121.a2", {1, 1, 1, -30, -76}, e11 * 131, e11 * 4973, -e11.pow(2),
                           -e11 * Rat(131).pow(3)),
                     curve("E_11a", "121.a1", {1, 1, 1, -305, 7888}, e11.pow(4), -e11.pow(5) * 43, -e11.pow(10),
                           -e11.pow(2))}};
        case 'b':
            return {'b',
                    {curve("E_1b", "121.b2", {0, -1, 1, -7, 10}, Rat(32) * 11, Rat(-8) * 7 * e11.pow(2),
                           -e11.pow(3), Rat(-32768)),
                     curve("E_11b", "121.b1", {0, -1, 1, -887, -10143}, Rat(32) * e11.pow(3), Rat(8) * 7 * e11.pow(5),
                           -e11.pow(9), Rat(-32768))}};
        default: throw InputError(std::string("L2(11) variant must be 'a' or 'b', got '") + variant + "'");
    }
}

bool on_x011(const Rat& x, const Rat& y) { return y * y + y == poly({-20, -10, -1, 1}, x); }

Rat x011_j(const Rat& x, const Rat& y) {
    if (!on_x011(x, y)) throw InputError("(" + x.str() + ", " + y.str() + ") is not on X_0(11)");
    if (x == Rat(16)) throw InputError("indeterminate at x=16");
    // The quadratic coefficient is the cubic in y; the printed subscripts of the quartic and the
    // cubic are interchanged (only this assignment gives -2^15 at (5, 5)).
    const Rat lead = poly({1776, -502, 125, -1}, y);
    const Rat mid = poly({6341, 4540, 536, -24}, y);
    const Rat tail = poly({-14372, 11803, -452, 641, -11}, y);
    return (lead * x * x + mid * x + tail) / (x - Rat(16));
}

Rat x011_j_16_60() { return Rat(-11) * Rat(131).pow(3); }

}  // namespace isotwist
