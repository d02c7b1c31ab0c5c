#include "isotwist/oracle.hpp"

#include "isotwist/errors.hpp"
#include "isotwist/families.hpp"
#include "isotwist/localdata.hpp"

namespace isotwist {

namespace {

Real rat_to_real(const Rat& r, const Real& like) {
    Real x(0, like.precision());
    mpfr_set_q(x.backend().data(), r.q().get_mpq_t(), MPFR_RNDN);
    return x;
}

}  // namespace

Real neron_volume(const Signature& s, unsigned bits) {
    const Rat u = global_minimal(s).second;
    const Real v = lattice_volume(s, bits).volume;
    return rat_to_real(u * u, v) * v;
}

Real faltings_height(const Signature& s, unsigned bits) {
    const Real v = neron_volume(s, bits);
    return -log(v) / 2;
}

HeightReport verify_class(const GraphType& g, const GraphParam& t, const mpz_class& d, unsigned bits,
                          char variant) {
    std::vector<std::string> labels;
    std::vector<Signature> members;
    if (g == GraphType{GraphShape::L3, 9}) {
        check_parameter(g, t);
        const auto sigs = l39_signatures(*t);
        labels = {"E_1", "E_3", "E_9"};
        members.assign(sigs.begin(), sigs.end());
    } else if (g == GraphType{GraphShape::L2, 11}) {
        check_parameter(g, t);
        for (const auto& c : l211_class(variant).curves) members.push_back(c.signature);
        labels = graph_structure(g).vertices;
    } else {
        throw InputError("no model-level data for type " + g.name() + "; use L3_9 or L2_11");
    }
    if (d == 0 || !is_squarefree(d)) throw InputError("d=" + d.get_str() + " is not square-free");

    HeightReport report;
    std::size_t best = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Signature tw = twist_sig(members[i], d);
        const Real nv = neron_volume(tw, bits);
        report.vertices.push_back({labels[i], tw, nv, Real(-log(nv) / 2)});
        if (nv > report.vertices[best].neron_volume) best = i;
    }
    const Real& top = report.vertices[best].neron_volume;
    Real runner_up(0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i != best && report.vertices[i].neron_volume > runner_up) runner_up = report.vertices[i].neron_volume;
    }
    report.argmin = labels[best];
    report.margin = top / runner_up;
    // Volume ratios are rationals >= 9/8 when the class is certified; 1e-9 leaves ample room.
    report.conclusive = report.margin > Real(1) + Real("1e-9");
    report.theorem_vertex = faltings_by_theorem(g, t, d).vertex;
    report.match = report.conclusive && report.argmin == report.theorem_vertex;
    return report;
}

std::vector<bool> squarefree_sieve(long bound) {
    if (bound < 0) throw InputError("bound must be non-negative");
    std::vector<bool> sf(static_cast<std::size_t>(bound) + 1, true);
    sf[0] = false;
    for (long k = 2; k * k <= bound; ++k) {
        for (long m = k * k; m <= bound; m += k * k) sf[static_cast<std::size_t>(m)] = false;
    }
    return sf;
}

DensityReport squarefree_density(long p, long bound) {
    if (p < 2 || !is_prime(mpz_class(p))) throw InputError(std::to_string(p) + " is not prime");
    if (bound < 10000) throw InputError("bound must be at least 10^4");
    const auto sf = squarefree_sieve(bound);
    DensityReport r{bound, 0, 0, 0.0, 0.0};
    for (long n = 1; n <= bound; ++n) {
        if (!sf[static_cast<std::size_t>(n)]) continue;
        ++r.squarefree;
        if (n % p == 0) ++r.divisible;
    }
    r.fraction_divisible = static_cast<double>(r.divisible) / static_cast<double>(r.squarefree);
    r.density = static_cast<double>(r.squarefree) / static_cast<double>(bound);
    return r;
}

EmpiricalReport empirical_prob(const GraphType& g, const GraphParam& t, long bound) {
    check_parameter(g, t);
    if (bound < 1) throw InputError("bound must be positive");
    const auto sf = squarefree_sieve(bound);
    EmpiricalReport r{0, {}, {}};
    for (long n = 1; n <= bound; ++n) {
        if (!sf[static_cast<std::size_t>(n)]) continue;
        for (long d : {n, -n}) {
            ++r.counts[faltings_by_theorem(g, t, d).vertex];
            ++r.samples;
        }
    }
    for (const auto& [v, c] : r.counts) r.frequencies[v] = static_cast<double>(c) / static_cast<double>(r.samples);
    return r;
}

}  // namespace isotwist
