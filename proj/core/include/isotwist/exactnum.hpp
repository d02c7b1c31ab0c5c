#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace isotwist {

// Reduced rational number backed by mpq_class.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "n", "-n", "n/d" in decimal. Throws InputError.
    static Rat parse(std::string_view text);

    const mpq_class& q() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat abs() const;
    Rat inverse() const;
    Rat pow(long e) const;

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// p-adic valuation: an integer, or infinity for the valuation of zero.
class Val {
public:
    Val(long v) : v_(v), inf_(false) {}  // NOLINT(google-explicit-constructor)
    static Val infinity() { return Val(); }

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }
    long value() const;  // throws InternalError for infinity

    std::string str() const;  // "inf" for infinity

    friend bool operator==(const Val& a, const Val& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend std::strong_ordering operator<=>(const Val& a, const Val& b) {
        if (a.inf_ || b.inf_) {
            if (a.inf_ && b.inf_) return std::strong_ordering::equal;
            return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return a.v_ <=> b.v_;
    }
    friend Val operator+(const Val& a, const Val& b) {
        return (a.inf_ || b.inf_) ? infinity() : Val(a.v_ + b.v_);
    }
    friend Val operator-(const Val& a, long k) { return a.inf_ ? a : Val(a.v_ - k); }

private:
    Val() : v_(0), inf_(true) {}
    long v_;
    bool inf_;
};

std::ostream& operator<<(std::ostream& os, const Val& v);

bool is_prime(const mpz_class& n);

// Exponent of p in x; infinity iff x = 0. Throws InputError when p is not prime.
Val vp(const Rat& x, long p);
long vp_int(const mpz_class& n, long p);  // n != 0, p assumed prime

// Residue of p^(-vp(x)) * x modulo p^k. Requires x != 0 and p^k < 2^62.
std::uint64_t unit_residue(const Rat& x, long p, int k);

// Residue of a p-integral x (vp(x) >= 0) modulo p^k.
std::uint64_t padic_residue(const Rat& x, long p, int k);

// True iff no square of a prime divides n. Throws InputError for n = 0.
bool is_squarefree(const mpz_class& n);

// Smallest non-negative representative of n modulo m (m > 0).
long mod_floor(const mpz_class& n, long m);

}  // namespace isotwist
