#include "isotwist/errors.hpp"
#include "isotwist/oracle.hpp"

#include <mutex>

namespace isotwist {

namespace {

std::mutex& precision_mutex() {
    static std::mutex m;
    return m;
}

// Sets the MPFR default precision for the lifetime of the guard.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
        Real::default_precision(bits * 30103 / 100000 + 2);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Rat& r) {
    Real x;
    mpfr_set_q(x.backend().data(), r.q().get_mpq_t(), MPFR_RNDN);
    return x;
}

// Raised when the working precision is too low for the inputs; the caller retries with more bits.
struct PrecisionLoss {};

Real agm(Real a, Real b, unsigned bits) {
    if (!(a > 0) || !(b > 0)) throw PrecisionLoss{};
    const Real eps = ldexp(Real(1), -static_cast<int>(bits) + 4);
    Real gap = abs(a - b);
    for (unsigned it = 0; gap > eps * a; ++it) {
        if (it > bits + 256) throw PrecisionLoss{};
        const Real next_a = (a + b) / 2;
        b = sqrt(a * b);
        a = next_a;
        const Real next_gap = abs(a - b);
        if (next_gap > gap / 2 + eps * a) throw InternalError("AGM failed to contract");
        gap = next_gap;
    }
    return a;
}

Real polish(Real x, const Real& A, const Real& B) {
    for (int i = 0; i < 6; ++i) {
        const Real fp = 3 * x * x + A;
        if (fp == 0) break;
        x -= (x * x * x + A * x + B) / fp;
    }
    return x;
}

// Period covolume at a fixed working precision.
Real volume_at(const Signature& s, unsigned bits) {
    const PrecisionScope scope(bits);
    const Real A = -to_real(s.c4()) / 48;
    const Real B = -to_real(s.c6()) / 864;
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    if (s.delta().sign() > 0) {
        // Three real roots e1 > e2 > e3 (trigonometric form, then Newton).
        const Real m = 2 * sqrt(-A / 3);
        if (!(A < 0)) throw PrecisionLoss{};
        Real c = (3 * B / (2 * A)) * sqrt(-3 / A);
        if (c > 1) c = 1;
        if (c < -1) c = -1;
        const Real theta = acos(c);
        Real e[3];
        for (int k = 0; k < 3; ++k) e[k] = polish(m * cos((theta - 2 * pi * k) / 3), A, B);
        std::sort(e, e + 3, [](const Real& x, const Real& y) { return x > y; });
        const Real real_period = pi / agm(sqrt(e[0] - e[2]), sqrt(e[0] - e[1]), bits);
        const Real imag_period = pi / agm(sqrt(e[0] - e[2]), sqrt(e[1] - e[2]), bits);
        return real_period * imag_period;
    }
    // One real root. The lattice is Z w1 + Z (w1/2 + i y) with both generators from real AGMs
    // (Cohen, Algorithm 7.4.7): alpha = sqrt(3 e1^2 + A), beta = 3 e1, and 2 alpha > |beta|.
    // B^2/4 + A^3/27 = -delta/1728, taken exactly to avoid cancellation near singular curves.
    const Real sd = sqrt(to_real(-s.delta() / Rat(1728)));
    const Real e1 = polish(cbrt(-B / 2 + sd) + cbrt(-B / 2 - sd), A, B);
    const Real alpha = sqrt(3 * e1 * e1 + A);
    const Real beta = 3 * e1;
    const Real w1 = 2 * pi / agm(2 * sqrt(alpha), sqrt(2 * alpha + beta), bits);
    const Real y = pi / agm(2 * sqrt(alpha), sqrt(2 * alpha - beta), bits);
    return w1 * y;
}

}  // namespace

LatticeApprox lattice_volume(const Signature& s, unsigned bits) {
    const std::lock_guard<std::mutex> lock(precision_mutex());
    for (unsigned p = std::max(bits, 64u); p <= 8192; p *= 2) {
        Real coarse, fine;
        try {
            coarse = volume_at(s, p);
            fine = volume_at(s, p + 64);
        } catch (const PrecisionLoss&) {
            continue;
        }
        const PrecisionScope scope(p + 64);
        const Real err = abs(fine - coarse);
        if (fine > 0 && err < fine * Real("1e-12")) return {fine, err, p};
    }
    throw InternalError("precision exhausted computing the period lattice");
}

}  // namespace isotwist
