#include "isotwist/errors.hpp"
#include "isotwist/exactnum.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace isotwist;

namespace {

long pow_long(long p, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

bool squarefree_by_trial(long n) {
    n = n < 0 ? -n : n;
    for (long k = 2; k * k <= n; ++k) {
        if (n % (k * k) == 0) return false;
    }
    return true;
}

}  // namespace

TEST(Rat, ParsesAndReduces) {
    EXPECT_EQ(Rat::parse("-3/7").str(), "-3/7");
    EXPECT_EQ(Rat::parse("6/4").str(), "3/2");
    EXPECT_EQ(Rat::parse("5").str(), "5");
    EXPECT_EQ(Rat::parse("+12/8").str(), "3/2");
}

TEST(Rat, ZeroIsZeroOverOne) {
    const Rat z = Rat::parse("0/17");
    EXPECT_EQ(z.num(), 0);
    EXPECT_EQ(z.den(), 1);
    EXPECT_EQ(z.str(), "0");
}

TEST(Rat, DenominatorPositive) {
    const Rat r(mpz_class(4), mpz_class(-6));
    EXPECT_EQ(r.den(), 3);
    EXPECT_EQ(r.num(), -2);
}

TEST(Rat, RejectsMalformed) {
    EXPECT_THROW(Rat::parse("1/0"), InputError);
    EXPECT_THROW(Rat::parse("abc"), InputError);
    EXPECT_THROW(Rat::parse("1.5"), InputError);
    EXPECT_THROW(Rat::parse(""), InputError);
    EXPECT_THROW(Rat::parse("3/-1"), InputError);
}

TEST(Vp, Examples) {
    EXPECT_EQ(vp(Rat(45, 1) / Rat(7), 3), Val(2));
    EXPECT_TRUE(vp(Rat(0), 5).is_inf());
    EXPECT_EQ(vp(Rat(1) / Rat(8), 2), Val(-3));
    EXPECT_THROW(vp(Rat(12), 4), InputError);
}

TEST(Vp, MultiplicativeOnRandomInputs) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    for (int i = 0; i < 2000; ++i) {
        long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        if (a == 0 || b == 0 || c == 0 || d == 0) continue;
        const Rat x = Rat(a) / Rat(b);
        const Rat y = Rat(c) / Rat(d);
        for (long p : {2L, 3L, 5L, 7L, 101L}) {
            EXPECT_EQ(vp(x * y, p), vp(x, p) + vp(y, p));
        }
    }
}

TEST(UnitResidue, Examples) {
    EXPECT_EQ(unit_residue(Rat(45) / Rat(7), 3, 2), 2u);
    EXPECT_EQ(unit_residue(Rat(8), 2, 2), 1u);
    EXPECT_EQ(unit_residue(Rat(-1331), 11, 1), 10u);
    EXPECT_THROW(unit_residue(Rat(0), 3, 1), InputError);
}

TEST(UnitResidue, InvertsPFreeDenominator) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> dist(1, 1000000);
    for (int i = 0; i < 2000; ++i) {
        const Rat x = Rat(dist(rng) * (i % 2 ? 1 : -1)) / Rat(dist(rng));
        for (long p : {2L, 3L, 5L, 11L}) {
            for (int k : {1, 2, 4}) {
                const long m = pow_long(p, k);
                const long v = vp(x, p).value();
                const Rat unit = x * Rat(p).pow(-v);
                const mpz_class lhs = mpz_class(static_cast<unsigned long>(unit_residue(x, p, k))) * unit.den();
                mpz_class diff = lhs - unit.num();
                EXPECT_EQ(mod_floor(diff, m), 0) << x << " p=" << p << " k=" << k;
            }
        }
    }
}

TEST(Squarefree, Examples) {
    EXPECT_TRUE(is_squarefree(-6));
    EXPECT_FALSE(is_squarefree(12));
    EXPECT_TRUE(is_squarefree(1));
    EXPECT_TRUE(is_squarefree(-1));
    EXPECT_THROW(is_squarefree(0), InputError);
}

TEST(Squarefree, AgreesWithTrialFactorization) {
    for (long n = -100000; n <= 100000; ++n) {
        if (n == 0) continue;
        ASSERT_EQ(is_squarefree(n), squarefree_by_trial(n)) << n;
    }
}

TEST(Squarefree, LargeSemiprimeCofactors) {
    const mpz_class p("1000000007"), q("998244353");
    EXPECT_TRUE(is_squarefree(p * q * 6));
    EXPECT_FALSE(is_squarefree(p * p * 6));
    EXPECT_FALSE(is_squarefree(q * q));
}
