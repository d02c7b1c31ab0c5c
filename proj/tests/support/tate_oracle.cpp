#include "tate_oracle.hpp"

#include <optional>
#include <stdexcept>

namespace oracle {

using isotwist::KodairaKind;
using isotwist::KodairaSymbol;

namespace {

mpz_class ppow(long p, int k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

bool divides(const mpz_class& m, const mpz_class& n) {
    return mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t()) != 0;
}

long md(const mpz_class& n, long p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
    return static_cast<long>(r.get_ui());
}

int val(const mpz_class& n, long p) {
    if (n == 0) return 1 << 20;
    mpz_class rest;
    const mpz_class pz(p);
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

// x = x' + r, y = y' + s x' + t.
Model shift(const Model& a, const mpz_class& r, const mpz_class& s, const mpz_class& t) {
    const auto& [a1, a2, a3, a4, a6] = a;
    Model b;
    b[0] = a1 + 2 * s;
    b[1] = a2 - s * a1 + 3 * r - s * s;
    b[2] = a3 + r * a1 + 2 * t;
    b[3] = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    b[4] = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    return b;
}

struct B {
    mpz_class b2, b4, b6, b8;
};

B binv(const Model& a) {
    const auto& [a1, a2, a3, a4, a6] = a;
    return {a1 * a1 + 4 * a2, 2 * a4 + a1 * a3, a3 * a3 + 4 * a6,
            a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4};
}

// y with y^2 + b y - c = 0 and 2y + b = 0 mod p.
std::optional<long> double_root_y(const mpz_class& b, const mpz_class& c, long p) {
    for (long y = 0; y < p; ++y) {
        if (md(y * y + b * y - c, p) == 0 && md(2 * y + b, p) == 0) return y;
    }
    return std::nullopt;
}

// x with a x^2 + b x + c = 0 and 2 a x + b = 0 mod p.
std::optional<long> double_root_x(const mpz_class& a, const mpz_class& b, const mpz_class& c, long p) {
    for (long x = 0; x < p; ++x) {
        if (md(a * x * x + b * x + c, p) == 0 && md(2 * a * x + b, p) == 0) return x;
    }
    return std::nullopt;
}

[[noreturn]] void fail(const char* what) { throw std::logic_error(std::string("tate oracle: ") + what); }

}  // namespace

mpz_class discriminant(const Model& a) {
    const B b = binv(a);
    return -b.b2 * b.b2 * b.b8 - 8 * b.b4 * b.b4 * b.b4 - 27 * b.b6 * b.b6 + 9 * b.b2 * b.b4 * b.b6;
}

TateResult tate(Model a, long p) {
    TateResult res;
    const mpz_class P(p), P2 = ppow(p, 2), P3 = ppow(p, 3), P4 = ppow(p, 4), P5 = ppow(p, 5), P6 = ppow(p, 6);
    for (int guard = 0; guard < 64; ++guard) {
        const mpz_class disc = discriminant(a);
        if (disc == 0) fail("singular model");
        const int n = val(disc, p);
        auto done = [&](KodairaSymbol k) {
            res.kodaira = k;
            res.minimal = a;
            return res;
        };
        if (n == 0) return done(KodairaSymbol::make(KodairaKind::I0));

        // Move the singular point of the reduction to (0, 0).
        bool moved = false;
        for (long x = 0; x < p && !moved; ++x) {
            for (long y = 0; y < p && !moved; ++y) {
                const auto& [a1, a2, a3, a4, a6] = a;
                const mpz_class f = y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6;
                const mpz_class fx = a1 * y - 3 * x * x - 2 * a2 * x - a4;
                const mpz_class fy = 2 * y + a1 * x + a3;
                if (md(f, p) == 0 && md(fx, p) == 0 && md(fy, p) == 0) {
                    a = shift(a, x, 0, y);
                    moved = true;
                }
            }
        }
        if (!moved) fail("no singular point found mod p");
        if (!divides(P, a[2]) || !divides(P, a[3]) || !divides(P, a[4])) fail("singular point not at origin");

        B b = binv(a);
        if (!divides(P, b.b2)) return done(KodairaSymbol::make(KodairaKind::In, n));
        if (!divides(P2, a[4])) return done(KodairaSymbol::make(KodairaKind::II));
        if (!divides(P3, b.b8)) return done(KodairaSymbol::make(KodairaKind::III));
        if (!divides(P3, b.b6)) return done(KodairaSymbol::make(KodairaKind::IV));

        // Arrange p | a1, a2; p^2 | a3, a4; p^3 | a6.
        bool arranged = false;
        for (long rho = 0; rho < p && !arranged; ++rho) {
            for (long s = 0; s < p && !arranged; ++s) {
                for (long tau = 0; tau < p && !arranged; ++tau) {
                    Model c = shift(a, P * rho, s, P * tau);
                    if (divides(P, c[0]) && divides(P, c[1]) && divides(P2, c[2]) && divides(P2, c[3]) &&
                        divides(P3, c[4])) {
                        a = c;
                        arranged = true;
                    }
                }
            }
        }
        if (!arranged) fail("cannot arrange valuations for the cubic step");

        const mpz_class a21 = a[1] / P, a42 = a[3] / P2, a63 = a[4] / P3;
        std::optional<long> alpha;
        for (long x = 0; x < p; ++x) {
            const mpz_class v = x * x * x + a21 * x * x + a42 * x + a63;
            const mpz_class dv = 3 * x * x + 2 * a21 * x + a42;
            if (md(v, p) == 0 && md(dv, p) == 0) {
                alpha = x;
                break;
            }
        }
        if (!alpha) return done(KodairaSymbol::make(KodairaKind::I0star));

        const long beta = md(-a21 - 2 * *alpha, p);
        if (beta != *alpha) {
            // Double root: the I_n^* chain.
            a = shift(a, P * *alpha, 0, 0);
            for (int m = 1; m < 4096; ++m) {
                if (m % 2 == 1) {
                    const int k = (m + 3) / 2;
                    const mpz_class pk = ppow(p, k), p2k = ppow(p, 2 * k);
                    if (!divides(pk, a[2]) || !divides(p2k, a[4])) fail("I_n^* chain lost divisibility (y)");
                    const auto y = double_root_y(a[2] / pk, a[4] / p2k, p);
                    if (!y) return done(KodairaSymbol::make(KodairaKind::Instar, m));
                    a = shift(a, 0, 0, pk * *y);
                } else {
                    const int k = (m + 2) / 2;
                    const mpz_class pk = ppow(p, k), pk1 = ppow(p, k + 1), p2k1 = ppow(p, 2 * k + 1);
                    if (!divides(pk1, a[3]) || !divides(p2k1, a[4])) fail("I_n^* chain lost divisibility (x)");
                    const auto x = double_root_x(a[1] / P, a[3] / pk1, a[4] / p2k1, p);
                    if (!x) return done(KodairaSymbol::make(KodairaKind::Instar, m));
                    a = shift(a, pk * *x, 0, 0);
                }
            }
            fail("I_n^* chain did not terminate");
        }

        // Triple root.
        a = shift(a, P * *alpha, 0, 0);
        if (!divides(P2, a[1]) || !divides(P3, a[3]) || !divides(P4, a[4])) fail("triple root step");
        const auto y = double_root_y(a[2] / P2, a[4] / P4, p);
        if (!y) return done(KodairaSymbol::make(KodairaKind::IVstar));
        a = shift(a, 0, 0, P2 * *y);
        if (!divides(P3, a[2]) || !divides(P5, a[4])) fail("IV* translation");
        if (!divides(P4, a[3])) return done(KodairaSymbol::make(KodairaKind::IIIstar));
        if (!divides(P6, a[4])) return done(KodairaSymbol::make(KodairaKind::IIstar));

        // Not minimal: divide by u = p and restart.
        a[0] /= P;
        a[1] /= P2;
        a[2] /= P3;
        a[3] /= P4;
        a[4] /= P6;
        ++res.scale_exponent;
    }
    fail("too many reductions");
}

}  // namespace oracle
