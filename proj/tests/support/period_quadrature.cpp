#include "period_quadrature.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

namespace {

using LD = long double;

LD to_ld(const isotwist::Rat& r) { return static_cast<LD>(r.q().get_d()); }

// Real roots of x^3 + A x + B by bracketing and bisection on the monotone pieces.
std::vector<LD> real_roots(LD A, LD B) {
    auto f = [&](LD x) { return x * x * x + A * x + B; };
    const LD bound = 1 + std::max(std::fabs(A), std::fabs(B));
    std::vector<LD> knots{-bound};
    if (A < 0) {
        const LD c = std::sqrt(-A / 3);
        knots.push_back(-c);
        knots.push_back(c);
    }
    knots.push_back(bound);
    std::vector<LD> roots;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        LD lo = knots[i], hi = knots[i + 1];
        if ((f(lo) > 0) == (f(hi) > 0)) continue;
        for (int it = 0; it < 200; ++it) {
            const LD mid = (lo + hi) / 2;
            if ((f(mid) > 0) == (f(lo) > 0)) lo = mid;
            else hi = mid;
        }
        roots.push_back((lo + hi) / 2);
    }
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

}  // namespace

long double quadrature_volume(const isotwist::Signature& s) {
    const LD A = -to_ld(s.c4()) / 48;
    const LD B = -to_ld(s.c6()) / 864;
    const auto roots = real_roots(A, B);
    const LD e1 = roots.front();
    // f(x) = (x - e1) q(x); the substitution x = e1 +- s^2 removes the square-root singularity.
    auto q = [&](LD x) { return x * x + e1 * x + e1 * e1 + A; };
    boost::math::quadrature::exp_sinh<LD> half_line;
    const LD real_period = half_line.integrate([&](LD u) { return 2 / std::sqrt(q(e1 + u * u)); });
    if (s.delta().sign() > 0) {
        const LD e2 = roots[1], e3 = roots[2];
        boost::math::quadrature::tanh_sinh<LD> finite;
        const LD imag_period = finite.integrate(
            [&](LD th) {
                const LD sn = std::sin(th);
                return 2 / std::sqrt(e2 - e3 + (e1 - e2) * sn * sn);
            },
            LD(0), boost::math::constants::half_pi<LD>());
        return real_period * imag_period;
    }
    // The purely imaginary loop over x < e1 is twice the imaginary part of the second generator.
    const LD loop = half_line.integrate([&](LD u) { return 2 / std::sqrt(q(e1 - u * u)); });
    return real_period * loop / 2;
}

}  // namespace oracle
