#include "isotwist/localdata.hpp"

#include "isotwist/errors.hpp"
#include "local_tables.hpp"
#include "primes.hpp"

#include <set>

namespace isotwist {

using detail::Cond;
using detail::LocalRow;
using detail::PalCell;

KodairaSymbol KodairaSymbol::make(KodairaKind kind, int n) {
    if (kind == KodairaKind::In && n == 0) return {KodairaKind::I0, 0};
    if (kind == KodairaKind::Instar && n == 0) return {KodairaKind::I0star, 0};
    if (kind == KodairaKind::I0) return {KodairaKind::I0, 0};
    if (kind == KodairaKind::I0star) return {KodairaKind::I0star, 0};
    if (kind != KodairaKind::In && kind != KodairaKind::Instar) return {kind, 0};
    return {kind, n};
}

bool KodairaSymbol::starred() const {
    switch (kind) {
        case KodairaKind::I0star:
        case KodairaKind::Instar:
        case KodairaKind::IVstar:
        case KodairaKind::IIIstar:
        case KodairaKind::IIstar:
            return true;
        default:
            return false;
    }
}

std::string KodairaSymbol::str() const {
    switch (kind) {
        case KodairaKind::I0: return "I0";
        case KodairaKind::In: return "I" + std::to_string(n);
        case KodairaKind::II: return "II";
        case KodairaKind::III: return "III";
        case KodairaKind::IV: return "IV";
        case KodairaKind::I0star: return "I0*";
        case KodairaKind::Instar: return "I" + std::to_string(n) + "*";
        case KodairaKind::IVstar: return "IV*";
        case KodairaKind::IIIstar: return "III*";
        case KodairaKind::IIstar: return "II*";
    }
    return "?";
}

namespace {

void require_prime(long p) {
    if (p < 2 || !is_prime(mpz_class(p))) throw InputError(std::to_string(p) + " is not prime");
}

bool p_integral(const Rat& x, long p) { return vp(x, p) >= Val(0); }

// A = -c4/48 and B = -c6/864, reduced mod 32. Only called on rows where both are 2-integral.
std::pair<long, long> ab_mod32(const Signature& s) {
    const Rat a = -s.c4() / Rat(48);
    const Rat b = -s.c6() / Rat(864);
    if (!p_integral(a, 2) || !p_integral(b, 2)) {
        throw InternalError("2-adic condition evaluated on a non-integral A or B");
    }
    return {static_cast<long>(padic_residue(a, 2, 5)), static_cast<long>(padic_residue(b, 2, 5))};
}

// Residues r mod 32 with Psi3(r) = 3r^4 + 6Ar^2 + 12Br - A^2 = 0 mod 32.
std::vector<long> psi3_roots(long a, long b) {
    std::vector<long> roots;
    for (long r = 0; r < 32; ++r) {
        const long v = 3 * r * r * r * r + 6 * a * r * r + 12 * b * r - a * a;
        if (((v % 32) + 32) % 32 == 0) roots.push_back(r);
    }
    return roots;
}

bool eval_condition(Cond c, const Signature& s) {
    switch (c) {
        case Cond::C2a: {
            const auto [a, b] = ab_mod32(s);
            const long a4 = a % 4, b4 = b % 4;
            return (a4 == 1 && (b4 == 0 || b4 == 1)) || (a4 != 1 && (b4 == 2 || b4 == 3));
        }
        case Cond::C2b: {
            const auto [a, b] = ab_mod32(s);
            const long v = 3 * a * a * a * a + 6 * a * a * a + 12 * b * a - a * a;
            return ((v % 8) + 8) % 8 != 0;
        }
        case Cond::C2c: {
            const auto [a, b] = ab_mod32(s);
            for (long r : psi3_roots(a, b)) {
                const long psi2 = (((r * r * r + a * r + b) % 16) + 16) % 16;
                if (psi2 != 1 && psi2 != 8 && psi2 != 9 && psi2 != 12) return false;
            }
            return true;
        }
        case Cond::C2d: {
            const auto [a, b] = ab_mod32(s);
            for (long r : psi3_roots(a, b)) {
                if (r % 4 != 1 && r % 4 != 2) return false;
            }
            return true;
        }
        case Cond::C2e:
            return unit_residue(s.c4(), 2, 2) == 3;
        case Cond::C2f:
            return unit_residue(s.c6(), 2, 2) == 1;
        case Cond::C2g:
            return unit_residue(s.c6(), 2, 2) == 3;
        case Cond::C3a: {
            const Rat x = (s.c6() / Rat(27)).pow(2) + Rat(2) - Rat(3) * (s.c4() / Rat(9));
            return padic_residue(x, 3, 2) == 0;
        }
        case Cond::C3b: {
            const Rat x = (s.c6() / Rat(729)).pow(2) + Rat(2) - Rat(3) * (s.c4() / Rat(81));
            return padic_residue(x, 3, 2) == 0;
        }
    }
    return false;
}

struct RowMatch {
    int index = -1;
    std::map<std::string, bool> conditions;
};

RowMatch match_row(const Signature& s, long p) {
    const PSignature ps = p_signature(s, p);
    const auto& table = detail::local_table(p);
    RowMatch m;
    for (int i = 0; i < static_cast<int>(table.size()); ++i) {
        const LocalRow& row = table[static_cast<std::size_t>(i)];
        if (!row.c4.matches(ps.vc4) || !row.c6.matches(ps.vc6) || !row.delta.matches(ps.vdelta)) {
            continue;
        }
        bool ok = true;
        for (const auto& lit : row.literals) {
            const char* label = detail::cond_label(lit.cond);
            auto it = m.conditions.find(label);
            if (it == m.conditions.end()) {
                it = m.conditions.emplace(label, eval_condition(lit.cond, s)).first;
            }
            if (it->second != lit.positive) {
                ok = false;
                break;
            }
        }
        if (ok) {
            m.index = i;
            return m;
        }
    }
    return m;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long max_scale_exponent(const PSignature& ps) {
    long k = floor_div(ps.vdelta.value(), 12);
    if (ps.vc4.is_finite()) k = std::min(k, floor_div(ps.vc4.value(), 4));
    if (ps.vc6.is_finite()) k = std::min(k, floor_div(ps.vc6.value(), 6));
    return k;
}

long d_mod4(const mpz_class& d) { return mod_floor(d, 4); }

void require_squarefree(const mpz_class& d) {
    if (d == 0 || !is_squarefree(d)) throw InputError("d=" + d.get_str() + " is not square-free");
}

}  // namespace

bool realizable(const Signature& s, long p) {
    require_prime(p);
    if (!p_integral(s.c4(), p) || !p_integral(s.c6(), p) || !p_integral(s.delta(), p)) {
        throw InputError("realizable: signature is not " + std::to_string(p) + "-integral");
    }
    if (p >= 5) return true;
    const auto b4_of = [&s](long b2) { return (Rat(b2 * b2) - s.c4()) / Rat(24); };
    const auto b6_of = [&s](long b2, const Rat& b4) {
        return (Rat(-b2 * b2 * b2) + Rat(36 * b2) * b4 - s.c6()) / Rat(216);
    };
    if (p == 3) {
        for (long b2 = 0; b2 < 81; ++b2) {
            const Rat b4 = b4_of(b2);
            if (!p_integral(b4, 3)) continue;
            if (p_integral(b6_of(b2, b4), 3)) return true;
        }
        return false;
    }
    for (long a1 = 0; a1 <= 1; ++a1) {
        for (long a3 = 0; a3 <= 1; ++a3) {
            for (long b2 = a1; b2 < 128; b2 += 4) {
                const Rat b4 = b4_of(b2);
                if (!p_integral(b4, 2) || static_cast<long>(padic_residue(b4, 2, 1)) != a1 * a3) continue;
                const Rat b6 = b6_of(b2, b4);
                if (!p_integral(b6, 2)) continue;
                if (static_cast<long>(padic_residue(b6, 2, 2)) == a3) return true;
            }
        }
    }
    return false;
}

bool local_condition(const std::string& label, const Signature& s) {
    for (Cond c : {Cond::C2a, Cond::C2b, Cond::C2c, Cond::C2d, Cond::C2e, Cond::C2f, Cond::C2g, Cond::C3a,
                   Cond::C3b}) {
        if (label == detail::cond_label(c)) return eval_condition(c, s);
    }
    throw InputError("unknown condition label '" + label + "'");
}

LocalClassification classify(const Signature& s, long p) {
    require_prime(p);
    const long kmax = max_scale_exponent(p_signature(s, p));
    // At k = kmax - 1 the scaled signature has v(c4) >= 4, v(c6) >= 6 and is always realizable.
    for (long k = kmax; k >= kmax - 1; --k) {
        const Rat u = Rat(p).pow(k);
        const Signature t = transform(s, u);
        if (!realizable(t, p)) continue;
        const RowMatch m = match_row(t, p);
        const PSignature ps = p_signature(t, p);
        if (m.index < 0) {
            throw InternalError("table miss at p=" + std::to_string(p) + " for sig_p " + ps.str());
        }
        const LocalRow& row = detail::local_table(p)[static_cast<std::size_t>(m.index)];
        if (row.non_minimal) {
            throw InternalError("table miss at p=" + std::to_string(p) + ": realizable model " + ps.str() +
                                " lands on a non-minimal row");
        }
        LocalClassification c;
        c.p = p;
        c.u_p = u;
        c.minimal_psig = ps;
        const int n = row.n_base >= 0 ? static_cast<int>(ps.vdelta.value()) - row.n_base : row.n_fixed;
        c.kodaira = KodairaSymbol::make(row.kind, n);
        c.conditions = m.conditions;
        c.row = row.pattern;
        c.row_index = m.index;
        return c;
    }
    throw InternalError("classify: no realizable scaling at p=" + std::to_string(p));
}

std::pair<Signature, Rat> global_minimal(const Signature& s) {
    std::set<mpz_class> primes{mpz_class(2), mpz_class(3)};
    for (const Rat* x : {&s.c4(), &s.c6(), &s.delta()}) {
        if (x->is_zero()) continue;
        for (const auto& q : detail::prime_divisors(x->den())) primes.insert(q);
    }
    // p >= 5 needs scaling only if p^4 | c4, p^6 | c6 and p^12 | delta, so p divides this gcd.
    mpz_class g = s.delta().num();
    for (const Rat* x : {&s.c4(), &s.c6()}) {
        if (!x->is_zero()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x->num().get_mpz_t());
    }
    for (const auto& q : detail::prime_divisors(g)) primes.insert(q);

    Rat u(1);
    for (const auto& q : primes) {
        if (!q.fits_slong_p()) throw InternalError("global_minimal: prime exceeds machine word");
        u *= classify(s, q.get_si()).u_p;
    }
    return {transform(s, u), u};
}

Rat pal_u(const LocalClassification& c, const Signature& minimal_sig, const mpz_class& d) {
    require_squarefree(d);
    const long p = c.p;
    if (p != 2) {
        if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return Rat(1);
        return c.kodaira.starred() ? Rat(p) : Rat(1);
    }
    const PSignature& ps = c.minimal_psig;
    const auto is = [](const Val& v, long k) { return v.is_finite() && v.value() == k; };
    const long r = d_mod4(d);
    if (r == 1) return Rat(1);
    if (r == 2) {
        if (is(ps.vc4, 0) && is(ps.vc6, 0)) return Rat(1, 2);
        if (is(ps.vc4, 6) && is(ps.vc6, 9) && ps.vdelta >= Val(18)) {
            if (padic_residue(minimal_sig.c6() * Rat(d) / Rat(1024), 2, 2) == 3) return Rat(4);
        }
        if (is(ps.vc4, 4) || is(ps.vc4, 5)) return Rat(1);
        if (is(ps.vc6, 3) || is(ps.vc6, 5) || is(ps.vc6, 7)) return Rat(1);
        if (ps.vc4 >= Val(6) && is(ps.vc6, 6) && is(ps.vdelta, 6)) {
            if (padic_residue(minimal_sig.c6() * Rat(d) / Rat(128), 2, 2) == 3) return Rat(1);
        }
        return Rat(2);
    }
    if (is(ps.vc4, 0) && is(ps.vc6, 0)) return Rat(1, 2);
    if (ps.vc4 >= Val(4) && is(ps.vc6, 3) && is(ps.vdelta, 0)) return Rat(1, 2);
    if (is(ps.vc4, 4) && is(ps.vc6, 6) && ps.vdelta >= Val(12)) return Rat(2);
    if (ps.vc4 >= Val(8) && is(ps.vc6, 9) && is(ps.vdelta, 12)) return Rat(2);
    return Rat(1);
}

Rat row_pal_u(const LocalClassification& c, const Signature& minimal_sig, const mpz_class& d) {
    require_squarefree(d);
    const auto& table = detail::local_table(c.p);
    if (c.row_index < 0 || c.row_index >= static_cast<int>(table.size())) {
        throw InternalError("row_pal_u: classification carries no table row");
    }
    const LocalRow& row = table[static_cast<std::size_t>(c.row_index)];
    std::size_t col = 0;
    if (c.p == 2) {
        col = static_cast<std::size_t>(d_mod4(d) - 1);
    } else {
        col = mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(c.p)) != 0 ? 0 : 1;
    }
    const PalCell cell = row.pal.at(col);
    switch (cell.kind) {
        case PalCell::Kind::Fixed:
            return Rat(mpz_class(cell.num), mpz_class(cell.den));
        case PalCell::Kind::PrimeP:
            return Rat(c.p);
        case PalCell::Kind::OneOrTwo: {
            const long half_d = mod_floor(mpz_class(d / 2), 4);
            const long c6u = static_cast<long>(unit_residue(minimal_sig.c6(), 2, 2));
            return c6u != half_d ? Rat(1) : Rat(2);
        }
        case PalCell::Kind::FourOrTwo: {
            const long half_d = mod_floor(mpz_class(d / 2), 4);
            const long c6u = static_cast<long>(unit_residue(minimal_sig.c6(), 2, 2));
            return c6u != half_d ? Rat(4) : Rat(2);
        }
    }
    throw InternalError("row_pal_u: unknown cell kind");
}

Rat twist_scale(const Signature& minimal_sig, const mpz_class& d) {
    require_squarefree(d);
    std::set<mpz_class> primes{mpz_class(2)};
    if (abs(d) > 1) {
        for (const auto& q : detail::prime_divisors(d)) primes.insert(q);
    }
    Rat u(1);
    for (const auto& q : primes) {
        const LocalClassification c = classify(minimal_sig, q.get_si());
        if (c.u_p != Rat(1)) throw InputError("twist_scale needs a minimal signature");
        u *= pal_u(c, minimal_sig, d);
    }
    return u;
}

}  // namespace isotwist
