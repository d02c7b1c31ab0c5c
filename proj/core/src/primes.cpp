#include "primes.hpp"

#include "isotwist/errors.hpp"

#include <algorithm>

namespace isotwist::detail {

namespace {

constexpr unsigned long kTrialLimit = 10000;

mpz_class brent_rho(const mpz_class& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    mpz_class y(seed % 1000 + 2), c(seed % 997 + 1), g(1), q(1), x, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const mpz_class& v) {
        mpz_class w = v * v + c;
        mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
        return w;
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            const unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = f(y);
                mpz_class diff = ::abs(x - y);
                q = (q * diff) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            mpz_class diff = ::abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split(const mpz_class& n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        ++out[n];
        return;
    }
    mpz_class root;
    if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
        for (unsigned long e = 2;; ++e) {
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                std::map<mpz_class, int> sub;
                split(root, sub);
                for (const auto& [p, k] : sub) out[p] += k * static_cast<int>(e);
                return;
            }
        }
    }
    for (unsigned long seed = 1;; ++seed) {
        mpz_class d = brent_rho(n, seed);
        if (d != n && d != 1) {
            split(d, out);
            split(n / d, out);
            return;
        }
        if (seed > 64) throw InternalError("factorize: rho failed to split a composite");
    }
}

}  // namespace

std::map<mpz_class, int> factorize(const mpz_class& n) {
    if (n == 0) throw InternalError("factorize(0)");
    std::map<mpz_class, int> out;
    mpz_class m = ::abs(n);
    for (unsigned long p = 2; p < kTrialLimit && m > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        out[mpz_class(p)] = e;
    }
    split(m, out);
    return out;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
    std::vector<mpz_class> ps;
    for (const auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

}  // namespace isotwist::detail
