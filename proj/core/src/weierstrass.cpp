#include "isotwist/weierstrass.hpp"

#include "isotwist/errors.hpp"

#include <sstream>
#include <vector>

namespace isotwist {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    if (!text.empty() && text.back() == ',') parts.emplace_back();
    return parts;
}

}  // namespace

BInvariants b_invariants(const AInvariants& a) {
    BInvariants b;
    b.b2 = a.a1 * a.a1 + Rat(4) * a.a2;
    b.b4 = Rat(2) * a.a4 + a.a1 * a.a3;
    b.b6 = a.a3 * a.a3 + Rat(4) * a.a6;
    b.b8 = a.a1 * a.a1 * a.a6 + Rat(4) * a.a2 * a.a6 - a.a1 * a.a3 * a.a4 + a.a2 * a.a3 * a.a3 -
           a.a4 * a.a4;
    return b;
}

Signature::Signature(Rat c4, Rat c6, Rat delta)
    : c4_(std::move(c4)), c6_(std::move(c6)), delta_(std::move(delta)) {
    if (delta_.is_zero()) throw InputError("singular curve: delta = 0");
    if (c4_ * c4_ * c4_ - c6_ * c6_ != Rat(1728) * delta_) {
        throw InputError("signature violates c4^3 - c6^2 = 1728*delta");
    }
}

Signature Signature::parse(const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 3) throw InputError("signature needs three entries c4,c6,delta");
    return Signature(Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2]));
}

std::string PSignature::str() const {
    return "(" + vc4.str() + "," + vc6.str() + "," + vdelta.str() + ")";
}

AInvariants parse_ainvariants(const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 5) throw InputError("a-invariants need five entries a1,a2,a3,a4,a6");
    return AInvariants{Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2]),
                       Rat::parse(parts[3]), Rat::parse(parts[4])};
}

Signature signature_of(const AInvariants& a) {
    const BInvariants b = b_invariants(a);
    const Rat c4 = b.b2 * b.b2 - Rat(24) * b.b4;
    const Rat c6 = -b.b2 * b.b2 * b.b2 + Rat(36) * b.b2 * b.b4 - Rat(216) * b.b6;
    const Rat delta = -b.b2 * b.b2 * b.b8 - Rat(8) * b.b4 * b.b4 * b.b4 -
                      Rat(27) * b.b6 * b.b6 + Rat(9) * b.b2 * b.b4 * b.b6;
    if (delta.is_zero()) throw InputError("singular curve: delta = 0");
    return Signature(c4, c6, delta);
}

PSignature p_signature(const Signature& s, long p) {
    return PSignature{vp(s.c4(), p), vp(s.c6(), p), vp(s.delta(), p)};
}

Signature transform(const Signature& s, const Rat& u) {
    if (u.is_zero()) throw InputError("transform by u = 0");
    const Rat u2 = u * u;
    const Rat u4 = u2 * u2;
    const Rat u6 = u4 * u2;
    return Signature(s.c4() / u4, s.c6() / u6, s.delta() / (u6 * u6));
}

Signature twist_sig(const Signature& s, const mpz_class& d) {
    if (d == 0 || !is_squarefree(d)) throw InputError("d=" + d.get_str() + " is not square-free");
    const Rat dd(d);
    const Rat d2 = dd * dd;
    const Rat d3 = d2 * dd;
    return Signature(d2 * s.c4(), d3 * s.c6(), d3 * d3 * s.delta());
}

Rat j_invariant(const Signature& s) { return s.c4() * s.c4() * s.c4() / s.delta(); }

AInvariants short_model(const Signature& s) {
    return AInvariants{Rat(0), Rat(0), Rat(0), -s.c4() / Rat(48), -s.c6() / Rat(864)};
}

}  // namespace isotwist
