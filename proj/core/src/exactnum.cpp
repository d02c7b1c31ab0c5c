#include "isotwist/exactnum.hpp"

#include "isotwist/errors.hpp"

#include <ostream>

namespace isotwist {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

mpz_class ui_pow(long p, int k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

// num * den^{-1} mod m, with gcd(den, m) = 1.
std::uint64_t ratio_mod(const mpz_class& num, const mpz_class& den, const mpz_class& m) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw InternalError("ratio_mod: denominator not invertible");
    }
    mpz_class r = (num * inv) % m;
    if (r < 0) r += m;
    return r.get_ui();
}

}  // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InputError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(ns), 10);
    mpz_class d(std::string(ds), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    if (neg) n = -n;
    return Rat(n, d);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Rat Rat::inverse() const {
    if (is_zero()) throw InputError("inverse of zero");
    return Rat(mpq_class(1 / q_));
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

std::string Rat::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) { q_ += o.q_; return *this; }
Rat& Rat::operator-=(const Rat& o) { q_ -= o.q_; return *this; }
Rat& Rat::operator*=(const Rat& o) { q_ *= o.q_; return *this; }
Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw InputError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

long Val::value() const {
    if (inf_) throw InternalError("finite value requested from infinite valuation");
    return v_;
}

std::string Val::str() const { return inf_ ? "inf" : std::to_string(v_); }

std::ostream& operator<<(std::ostream& os, const Val& v) { return os << v.str(); }

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

long vp_int(const mpz_class& n, long p) {
    mpz_class rest;
    const mpz_class pz(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

Val vp(const Rat& x, long p) {
    if (!is_prime(mpz_class(p))) throw InputError(std::to_string(p) + " is not prime");
    if (x.is_zero()) return Val::infinity();
    return Val(vp_int(x.num(), p) - vp_int(x.den(), p));
}

std::uint64_t unit_residue(const Rat& x, long p, int k) {
    if (x.is_zero()) throw InputError("unit_residue of zero");
    const long v = vp(x, p).value();
    const Rat unit = x * Rat(p).pow(-v);
    return ratio_mod(unit.num(), unit.den(), ui_pow(p, k));
}

std::uint64_t padic_residue(const Rat& x, long p, int k) {
    if (x.is_zero()) return 0;
    if (vp(x, p) < Val(0)) throw InternalError("padic_residue of a non-integral value");
    return ratio_mod(x.num(), x.den(), ui_pow(p, k));
}

long mod_floor(const mpz_class& n, long m) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(m));
    return static_cast<long>(r.get_ui());
}

bool is_squarefree(const mpz_class& n) {
    if (n == 0) throw InputError("is_squarefree(0) is undefined");
    mpz_class m = ::abs(n);
    auto strip = [&m](unsigned long p) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) return true;
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        return mpz_divisible_ui_p(m.get_mpz_t(), p) == 0;
    };
    // Trial division up to the cube root of |n|; the cofactor then has at most two prime factors.
    mpz_class root;
    mpz_root(root.get_mpz_t(), m.get_mpz_t(), 3);
    const mpz_class limit = root + 1;
    if (!strip(2) || !strip(3)) return false;
    for (unsigned long p = 5; limit >= p; p += 6) {
        if (!strip(p) || !strip(p + 2)) return false;
    }
    return m == 1 || mpz_perfect_square_p(m.get_mpz_t()) == 0;
}

}  // namespace isotwist
