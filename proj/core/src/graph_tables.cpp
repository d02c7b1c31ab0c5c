#include "graph_tables.hpp"

#include "isotwist/errors.hpp"

#include <algorithm>
#include <map>

namespace isotwist::detail {

bool DCond::matches(const mpz_class& d) const {
    switch (kind) {
        case Kind::All:
            return true;
        case Kind::Divisible:
            return mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
        case Kind::NotDivisible:
            return mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) == 0;
    }
    return false;
}

std::string DCond::str() const {
    switch (kind) {
        case Kind::All:
            return "all";
        case Kind::Divisible:
            return "d≡0(" + std::to_string(p) + ")";
        case Kind::NotDivisible:
            return "d≢0(" + std::to_string(p) + ")";
    }
    return "?";
}

bool satisfies(const TCond& c, const Rat& t) {
    for (const TAtom& a : c.atoms) {
        switch (a.kind) {
            case TAtom::Kind::ValRange: {
                const long v = vp(t, a.p).value();
                if (v < a.lo || v > a.hi) return false;
                break;
            }
            case TAtom::Kind::ValNe:
                if (vp(t, a.p).value() == a.lo) return false;
                break;
            case TAtom::Kind::ShiftVal: {
                const Val v = vp(t + Rat(a.shift), a.p);
                if (v.is_inf()) return false;
                const long r = ((v.value() % a.m) + a.m) % a.m;
                if (std::find(a.residues.begin(), a.residues.end(), r) == a.residues.end()) return false;
                break;
            }
            case TAtom::Kind::UnitMod: {
                const long r = static_cast<long>(unit_residue(t, a.p, static_cast<int>(a.lo)));
                if (std::find(a.residues.begin(), a.residues.end(), r) == a.residues.end()) return false;
                break;
            }
        }
    }
    return true;
}

namespace {

using DK = DCond::Kind;

DCond all() { return {DK::All, 0}; }
DCond div(long p) { return {DK::Divisible, p}; }
DCond ndiv(long p) { return {DK::NotDivisible, p}; }

TAtom ge(long p, long k) { return {TAtom::Kind::ValRange, p, k, LONG_MAX, 0, 0, {}}; }
TAtom le(long p, long k) { return {TAtom::Kind::ValRange, p, LONG_MIN, k, 0, 0, {}}; }
TAtom eq(long p, long k) { return {TAtom::Kind::ValRange, p, k, k, 0, 0, {}}; }
TAtom ne(long p, long k) { return {TAtom::Kind::ValNe, p, k, LONG_MAX, 0, 0, {}}; }
TAtom shifted(long p, long shift, long m, std::vector<long> res) {
    return {TAtom::Kind::ShiftVal, p, LONG_MIN, LONG_MAX, shift, m, std::move(res)};
}
TAtom unit(long p, long k, std::vector<long> res) {
    return {TAtom::Kind::UnitMod, p, k, LONG_MAX, 0, 0, std::move(res)};
}

TCond when(std::string text, std::vector<TAtom> atoms) { return {std::move(text), std::move(atoms)}; }
TCond genus() { return {"genus≥1", {}}; }

TCond both(const TCond& x, const TCond& y) {
    TCond c{x.text + ", " + y.text, x.atoms};
    c.atoms.insert(c.atoms.end(), y.atoms.begin(), y.atoms.end());
    return c;
}

std::vector<Rat> v(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}
std::vector<Rat> ones(std::size_t n) { return std::vector<Rat>(n, Rat(1)); }

Rat q(long n, long d) { return Rat(mpz_class(n), mpz_class(d)); }

std::string vname(long i) { return "E_" + std::to_string(i); }

std::string vp_text(long p) { return "v_" + std::to_string(p) + "(t)"; }

// L2(p) for genus-0 p, the pattern shared by p = 2, 3, 5, 7, 13.
TypeTables l2_genus0(long p) {
    TypeTables T;
    T.vertices = {"E_1", vname(p)};
    T.edges = {{0, 1, p}};
    T.volumes = {Rat(1), q(1, p)};
    const std::string Ep = vname(p);
    const Rat lo = q(1, p + 1), hi = q(p, p + 1);
    const std::string vt = vp_text(p);
    auto split = [&](const TCond& c, const std::string& nondiv, const std::string& divv) {
        T.theorem.push_back({c, ndiv(p), nondiv, hi});
        T.theorem.push_back({c, div(p), divv, lo});
    };
    const auto up = v({1, p});
    const auto r1 = v({1, 1});
    auto rule = [&](const TCond& c, std::vector<Rat> uE, std::vector<Rat> nondiv, std::vector<Rat> divv) {
        T.rules.resize(1);
        T.rules[0].rows.push_back({c, std::move(uE), {{ndiv(p), std::move(nondiv)}, {div(p), std::move(divv)}}});
    };
    auto rule_all = [&](const TCond& c, std::vector<Rat> uE) {
        T.rules.resize(1);
        T.rules[0].rows.push_back({c, std::move(uE), {{all(), r1}}});
    };
    if (p == 2 || p == 3) {
        // Valuation thresholds; the row v_p(t) = top - 2 splits on the valuation of t + s.
        const long top = p == 2 ? 8 : 5;
        const long s = p == 2 ? 64 : 27;
        const long m = p == 2 ? 4 : 6;
        const std::vector<long> high = p == 2 ? std::vector<long>{2, 3} : std::vector<long>{3, 4, 5};
        const std::vector<long> low = p == 2 ? std::vector<long>{0, 1} : std::vector<long>{0, 1, 2};
        const std::string st = "v_" + std::to_string(p) + "(t+" + std::to_string(s) + ")";
        auto residues = [](const std::vector<long>& r) {
            std::string out;
            for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
            return out;
        };
        const std::string mod = "(" + std::to_string(m) + ")";
        const TCond c_top = when(vt + "≥" + std::to_string(top), {ge(p, top)});
        const TCond c_a = when(vt + "=" + std::to_string(top - 1), {eq(p, top - 1)});
        const TCond c_b = when(vt + "=" + std::to_string(top - 2) + ", " + st + "≡" + residues(high) + mod,
                               {eq(p, top - 2), shifted(p, s, m, high)});
        const TCond c_c = when(vt + "=" + std::to_string(top - 2) + ", " + st + "≡" + residues(low) + mod,
                               {eq(p, top - 2), shifted(p, s, m, low)});
        const TCond c_d = when(vt + "=" + std::to_string(top - 3), {eq(p, top - 3)});
        const TCond c_bot = when(vt + "≤" + std::to_string(top - 4), {le(p, top - 4)});
        T.theorem.push_back({c_top, all(), Ep, Rat(1)});
        split(c_a, Ep, "E_1");
        split(c_b, Ep, "E_1");
        split(c_c, "E_1", Ep);
        split(c_d, "E_1", Ep);
        T.theorem.push_back({c_bot, all(), "E_1", Rat(1)});
        // The rule table prints each pair of t-rows with one shared [u(E)] cell and one
        // d-row each; both d-rows apply to both t-rows.
        rule_all(c_top, up);
        rule(c_a, up, r1, v({p, 1}));
        rule(c_b, up, r1, v({p, 1}));
        rule(c_c, r1, r1, up);
        rule(c_d, r1, r1, up);
        rule_all(c_bot, r1);
        return T;
    }
    if (p == 5) {
        const TCond c3 = when(vt + "≥3", {ge(5, 3)}), c2 = when(vt + "=2", {eq(5, 2)}),
                    c1 = when(vt + "=1", {eq(5, 1)}), c0 = when(vt + "≤0", {le(5, 0)});
        T.theorem.push_back({c3, all(), Ep, Rat(1)});
        split(c2, Ep, "E_1");
        split(c1, "E_1", Ep);
        T.theorem.push_back({c0, all(), "E_1", Rat(1)});
        rule_all(c3, up);
        rule(c2, up, r1, v({5, 1}));
        rule(c1, r1, r1, up);
        rule_all(c0, r1);
        return T;
    }
    if (p == 7) {
        const TCond c2 = when(vt + "≥2", {ge(7, 2)}), c1 = when(vt + "=1", {eq(7, 1)}),
                    c0 = when(vt + "≤0", {le(7, 0)});
        T.theorem.push_back({c2, all(), Ep, Rat(1)});
        split(c1, "E_1", Ep);
        T.theorem.push_back({c0, all(), "E_1", Rat(1)});
        rule_all(c2, up);
        rule(c1, r1, r1, up);
        rule_all(c0, r1);
        return T;
    }
    // p = 13
    const TCond cp = when(vt + ">0", {ge(13, 1)}), c0 = when(vt + "≤0", {le(13, 0)});
    T.theorem.push_back({cp, all(), Ep, Rat(1)});
    T.theorem.push_back({c0, all(), "E_1", Rat(1)});
    rule_all(cp, up);
    rule_all(c0, r1);
    return T;
}

// L2(p) with X_0(p) of genus >= 1.
TypeTables l2_genus1(long p) {
    TypeTables T;
    T.vertices = {"E_1", vname(p)};
    T.edges = {{0, 1, p}};
    T.volumes = {Rat(1), q(1, p)};
    T.rules.resize(1);
    if (p == 37) {
        T.theorem.push_back({genus(), all(), "E_1", Rat(1)});
        T.rules[0].rows.push_back({genus(), v({1, 1}), {{all(), v({1, 1})}}});
        return T;
    }
    T.theorem.push_back({genus(), ndiv(p), "E_1", q(p, p + 1)});
    T.theorem.push_back({genus(), div(p), vname(p), q(1, p + 1)});
    T.rules[0].rows.push_back({genus(), v({1, 1}), {{ndiv(p), v({1, 1})}, {div(p), v({1, p})}}});
    return T;
}

TypeTables l3(long p) {
    TypeTables T;
    T.vertices = {"E_1", vname(p), vname(p * p)};
    T.edges = {{0, 1, p}, {1, 2, p}};
    T.volumes = {Rat(1), q(1, p), q(1, p * p)};
    T.rules.resize(1);
    auto& rows = T.rules[0].rows;
    const std::string vt = vp_text(p);
    if (p == 3) {
        const TCond c3 = when(vt + "≥3", {ge(3, 3)}), c2 = when(vt + "=2", {eq(3, 2)}),
                    c1 = when(vt + "=1", {eq(3, 1)}), c0 = when(vt + "≤0", {le(3, 0)});
        T.theorem = {
            {c3, all(), "E_9", Rat(1)},
            {c2, ndiv(3), "E_3", q(3, 4)},
            {c2, div(3), "E_9", q(1, 4)},
            {c1, ndiv(3), "E_1", q(3, 4)},
            {c1, div(3), "E_3", q(1, 4)},
            {c0, all(), "E_1", Rat(1)},
        };
        rows.push_back({c3, v({1, 3, 9}), {{all(), ones(3)}}});
        rows.push_back({c2, v({1, 3, 3}), {{ndiv(3), ones(3)}, {div(3), v({1, 1, 3})}}});
        rows.push_back({c1, ones(3), {{ndiv(3), ones(3)}, {div(3), v({1, 3, 3})}}});
        rows.push_back({c0, ones(3), {{all(), ones(3)}}});
        return T;
    }
    const TCond c1 = when(vt + "≥1", {ge(5, 1)}), c0 = when(vt + "≤0", {le(5, 0)});
    T.theorem = {{c1, all(), "E_25", Rat(1)}, {c0, all(), "E_1", Rat(1)}};
    rows.push_back({c1, v({1, 5, 25}), {{all(), ones(3)}}});
    rows.push_back({c0, ones(3), {{all(), ones(3)}}});
    return T;
}

TypeTables l4() {
    TypeTables T;
    T.vertices = {"E_1", "E_3", "E_9", "E_27"};
    T.edges = {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}};
    T.volumes = {Rat(1), q(1, 3), q(1, 9), q(1, 27)};
    T.theorem = {{genus(), ndiv(3), "E_3", q(3, 4)}, {genus(), div(3), "E_9", q(1, 4)}};
    // [u(E)] is printed as (1:1:1:1). The class 27a (E_1 = 27a4, E_3 = 27a3, E_9 = 27a1,
    // E_27 = 27a2) has Néron volumes proportional to (1:3:1:1/3), which forces (1:3:3:3).
    T.rules = {{{{genus(), v({1, 3, 3, 3}), {{ndiv(3), ones(4)}, {div(3), v({1, 1, 3, 3})}}}}}};
    return T;
}

// Vertices (E_1, E_p, E_q, E_pq).
TypeTables r4_frame(long p, long qq) {
    TypeTables T;
    T.vertices = {"E_1", vname(p), vname(qq), vname(p * qq)};
    T.edges = {{0, 1, p}, {0, 2, qq}, {1, 3, qq}, {2, 3, p}};
    T.volumes = {Rat(1), q(1, p), q(1, qq), q(1, p * qq)};
    return T;
}

TypeTables r4_6() {
    TypeTables T = r4_frame(2, 3);
    const TCond a2 = when("v_2(t)≥2", {ge(2, 2)}), b2 = when("v_2(t)≤1", {le(2, 1)});
    const TCond a3 = when("v_3(t)≥2", {ge(3, 2)}), b3 = when("v_3(t)=1", {eq(3, 1)}),
                c3 = when("v_3(t)≤0", {le(3, 0)});
    T.theorem = {
        {both(a2, a3), all(), "E_6", Rat(1)},
        {both(a2, b3), div(3), "E_2", q(1, 4)},
        {both(a2, b3), ndiv(3), "E_6", q(3, 4)},
        {both(a2, c3), all(), "E_2", Rat(1)},
        {both(b2, a3), all(), "E_3", Rat(1)},
        {both(b2, b3), div(3), "E_1", q(1, 4)},
        {both(b2, b3), ndiv(3), "E_3", q(3, 4)},
        {both(b2, c3), all(), "E_1", Rat(1)},
    };
    RuleBlock u2{{{a2, v({1, 2, 1, 2}), {{all(), ones(4)}}}, {b2, ones(4), {{all(), ones(4)}}}}};
    RuleBlock u3{{
        {a3, v({1, 1, 3, 3}), {{all(), ones(4)}}},
        {b3, ones(4), {{ndiv(3), ones(4)}, {div(3), v({1, 1, 3, 3})}}},
        {c3, ones(4), {{all(), ones(4)}}},
    }};
    T.rules = {u2, u3};
    return T;
}

TypeTables r4_10() {
    TypeTables T = r4_frame(2, 5);
    const TCond a2 = when("v_2(t)>1", {ge(2, 2)}), b2 = when("v_2(t)=1", {eq(2, 1)}),
                c2 = when("v_2(t)≤0", {le(2, 0)});
    const TCond a5 = when("v_5(t)≠0", {ne(5, 0)});
    const TCond b5 = when("v_5(t)=0, t≢4(5)", {eq(5, 0), unit(5, 1, {1, 2, 3})});
    const TCond c5 = when("v_5(t)=0, t≡4(5)", {eq(5, 0), unit(5, 1, {4})});
    T.theorem = {
        {both(a2, a5), all(), "E_2", Rat(1)},
        {both(a2, b5), all(), "E_2", Rat(1)},
        {both(a2, c5), all(), "E_10", Rat(1)},
        {both(b2, a5), div(2), "E_1", q(1, 3)},
        {both(b2, a5), ndiv(2), "E_2", q(2, 3)},
        {both(b2, b5), div(2), "E_1", q(1, 3)},
        {both(b2, b5), ndiv(2), "E_2", q(2, 3)},
        {both(b2, c5), div(2), "E_5", q(1, 3)},
        {both(b2, c5), ndiv(2), "E_10", q(2, 3)},
        {both(c2, c5), all(), "E_5", Rat(1)},
        {both(c2, a5), all(), "E_1", Rat(1)},
        {both(c2, b5), all(), "E_1", Rat(1)},
    };
    RuleBlock u2{{
        {a2, v({1, 2, 1, 2}), {{all(), ones(4)}}},
        {b2, v({1, 2, 1, 2}), {{ndiv(2), ones(4)}, {div(2), v({2, 1, 2, 1})}}},
        {c2, ones(4), {{all(), ones(4)}}},
    }};
    RuleBlock u5{{
        {a5, ones(4), {{all(), ones(4)}}},
        {b5, ones(4), {{all(), ones(4)}}},
        {c5, v({1, 1, 5, 5}), {{all(), ones(4)}}},
    }};
    T.rules = {u2, u5};
    return T;
}

TypeTables r4_genus1(long p, long qq, long dp, std::vector<Rat> twisted) {
    TypeTables T = r4_frame(p, qq);
    T.theorem = {{genus(), ndiv(dp), "E_1", q(dp, dp + 1)}, {genus(), div(dp), vname(dp), q(1, dp + 1)}};
    T.rules = {{{{genus(), ones(4), {{ndiv(dp), ones(4)}, {div(dp), std::move(twisted)}}}}}};
    return T;
}

TypeTables r6() {
    TypeTables T;
    T.vertices = {"E_1", "E_2", "E_3", "E_6", "E_9", "E_18"};
    T.edges = {{0, 2, 3}, {2, 4, 3}, {1, 3, 3}, {3, 5, 3}, {0, 1, 2}, {2, 3, 2}, {4, 5, 2}};
    T.volumes = {Rat(1), q(1, 2), q(1, 3), q(1, 6), q(1, 9), q(1, 18)};
    const TCond a2 = when("v_2(t)>0", {ge(2, 1)}), b2 = when("v_2(t)≤0", {le(2, 0)});
    const TCond a3 = when("v_3(t)≠0", {ne(3, 0)}), b3 = when("v_3(t)=0", {eq(3, 0)});
    T.theorem = {
        {both(a2, a3), all(), "E_2", Rat(1)},
        {both(a2, b3), all(), "E_18", Rat(1)},
        {both(b2, a3), all(), "E_1", Rat(1)},
        {both(b2, b3), all(), "E_9", Rat(1)},
    };
    RuleBlock u2{{{a2, v({1, 2, 1, 2, 1, 2}), {{all(), ones(6)}}}, {b2, ones(6), {{all(), ones(6)}}}}};
    RuleBlock u3{{{b3, v({1, 1, 3, 3, 9, 9}), {{all(), ones(6)}}}, {a3, ones(6), {{all(), ones(6)}}}}};
    T.rules = {u2, u3};
    return T;
}

TypeTables t4() {
    TypeTables T;
    T.vertices = {"E_1", "E_2", "E_4", "E_12"};
    T.edges = {{0, 1, 2}, {1, 2, 2}, {1, 3, 2}};
    T.volumes = {Rat(1), q(1, 2), q(1, 4), q(1, 4)};
    const TCond c6 = when("v_2(t)≥6", {ge(2, 6)}), c5 = when("v_2(t)=5", {eq(2, 5)}),
                c41 = when("v_2(t)=4, t/2^4≡1(4)", {eq(2, 4), unit(2, 2, {1})}),
                c43 = when("v_2(t)=4, t/2^4≡3(4)", {eq(2, 4), unit(2, 2, {3})}),
                c3 = when("v_2(t)=3", {eq(2, 3)}), c2 = when("v_2(t)≤2", {le(2, 2)});
    T.theorem = {
        {c6, all(), "E_4", Rat(1)},
        {c5, div(2), "E_4", q(1, 3)},
        {c5, ndiv(2), "E_2", q(2, 3)},
        {c41, div(2), "E_12", q(1, 3)},
        {c41, ndiv(2), "E_2", q(2, 3)},
        {c43, all(), "E_12", Rat(1)},
        {c3, div(2), "E_2", q(1, 3)},
        {c3, ndiv(2), "E_1", q(2, 3)},
        {c2, all(), "E_1", Rat(1)},
    };
    T.rules = {{{
        {c6, v({1, 2, 4, 1}), {{all(), ones(4)}}},
        {c5, v({1, 2, 2, 2}), {{ndiv(2), ones(4)}, {div(2), v({1, 1, 2, 1})}}},
        {c41, v({1, 2, 2, 2}), {{ndiv(2), ones(4)}, {div(2), v({1, 1, 1, 2})}}},
        {c43, v({1, 2, 2, 4}), {{all(), ones(4)}}},
        {c3, ones(4), {{ndiv(2), v({1, 2, 2, 2})}, {div(2), ones(4)}}},
        {c2, ones(4), {{all(), ones(4)}}},
    }}};
    return T;
}

TypeTables t6() {
    TypeTables T;
    // Positions follow the graph diagram; the volume table repeats the label E_12 in the last slot.
    T.vertices = {"E_1", "E_2", "E_12", "E_4", "E_8", "E_22"};
    T.edges = {{0, 1, 2}, {2, 1, 2}, {1, 3, 2}, {3, 4, 2}, {3, 5, 2}};
    T.volumes = {Rat(1), q(1, 2), q(1, 4), q(1, 4), q(1, 8), q(1, 8)};
    const TCond c3 = when("v_2(t)≥3", {ge(2, 3)}),
                c23 = when("v_2(t)=2, t/2^2≡3(4)", {eq(2, 2), unit(2, 2, {3})}),
                c21 = when("v_2(t)=2, t/2^2≡1(4)", {eq(2, 2), unit(2, 2, {1})}),
                c1 = when("v_2(t)≤1", {le(2, 1)});
    T.theorem = {
        {c3, all(), "E_12", Rat(1)},
        {c23, all(), "E_8", Rat(1)},
        {c21, all(), "E_22", Rat(1)},
        {c1, all(), "E_1", Rat(1)},
    };
    T.rules = {{{
        {c3, v({1, 2, 4, 2, 2, 2}), {{all(), ones(6)}}},
        {c23, v({1, 2, 2, 4, 4, 8}), {{all(), ones(6)}}},
        {c21, v({1, 2, 2, 4, 8, 4}), {{all(), ones(6)}}},
        {c1, ones(6), {{all(), ones(6)}}},
    }}};
    return T;
}

TypeTables t8() {
    TypeTables T;
    T.vertices = {"E_1", "E_2", "E_21", "E_4", "E_41", "E_8", "E_81", "E_16"};
    T.edges = {{2, 1, 2}, {1, 0, 2}, {1, 3, 2}, {3, 4, 2}, {3, 5, 2}, {5, 6, 2}, {5, 7, 2}};
    T.volumes = {Rat(1), q(1, 2), q(1, 4), q(1, 4), q(1, 8), q(1, 8), q(1, 16), q(1, 16)};
    const TCond c2 = when("v_2(t)≥2", {ge(2, 2)}),
                c13 = when("v_2(t)=1, t/2≡3(4)", {eq(2, 1), unit(2, 2, {3})}),
                c11 = when("v_2(t)=1, t/2≡1(4)", {eq(2, 1), unit(2, 2, {1})}),
                c0 = when("v_2(t)≤0", {le(2, 0)});
    T.theorem = {
        {c2, all(), "E_21", Rat(1)},
        {c13, all(), "E_81", Rat(1)},
        {c11, all(), "E_16", Rat(1)},
        {c0, all(), "E_2", Rat(1)},
    };
    T.rules = {{{
        {c2, v({1, 2, 4, 2, 2, 2, 2, 2}), {{all(), ones(8)}}},
        {c13, v({1, 2, 2, 4, 4, 8, 16, 8}), {{all(), ones(8)}}},
        {c11, v({1, 2, 2, 4, 4, 8, 8, 16}), {{all(), ones(8)}}},
        {c0, ones(8), {{all(), ones(8)}}},
    }}};
    return T;
}

TypeTables s8() {
    TypeTables T;
    T.vertices = {"E_1", "E_3", "E_2", "E_6", "E_21", "E_12", "E_4", "E_31"};
    T.edges = {{0, 2, 2}, {0, 1, 3}, {1, 3, 2}, {2, 3, 3}, {2, 4, 2},
               {2, 6, 2}, {3, 5, 2}, {3, 7, 2}, {4, 5, 3}, {6, 7, 3}};
    T.volumes = {Rat(1), q(1, 3), q(1, 2), q(1, 6), q(1, 4), q(1, 12), q(1, 4), q(1, 12)};
    const TCond a2 = when("v_2(t)≠0", {ne(2, 0)});
    const TCond t3 = when("v_2(t)=0, t≡3(4)", {eq(2, 0), unit(2, 2, {3})});
    const TCond t1 = when("v_2(t)=0, t≡1(4)", {eq(2, 0), unit(2, 2, {1})});
    const TCond a3 = when("v_3(t)>1", {ge(3, 2)}), b3 = when("v_3(t)≤0", {le(3, 0)});
    // No theorem row covers v_3(t) = 1.
    T.theorem = {
        {both(a3, a2), all(), "E_3", Rat(1)},
        {both(a3, t3), all(), "E_12", Rat(1)},
        {both(a3, t1), all(), "E_31", Rat(1)},
        {both(b3, a2), all(), "E_1", Rat(1)},
        {both(b3, t3), all(), "E_4", Rat(1)},
        {both(b3, t1), all(), "E_21", Rat(1)},
    };
    // The rule table prints "t/2≡3(4)" with v_2(t) = 0; read as the unit condition t≡3(4).
    const TCond r3 = when("v_2(t)=0, t/2≡3(4)", {eq(2, 0), unit(2, 2, {3})});
    const TCond r1 = when("v_2(t)=0, t/2≡1(4)", {eq(2, 0), unit(2, 2, {1})});
    RuleBlock u2{{
        {a2, ones(8), {{all(), ones(8)}}},
        {r3, v({1, 1, 2, 2, 2, 4, 4, 2}), {{all(), ones(8)}}},
        {r1, v({1, 1, 2, 2, 4, 2, 2, 4}), {{all(), ones(8)}}},
    }};
    RuleBlock u3{{
        {when("v_3(t)>0", {ge(3, 1)}), v({1, 3, 1, 3, 1, 3, 1, 3}), {{all(), ones(8)}}},
        {b3, ones(8), {{all(), ones(8)}}},
    }};
    T.rules = {u2, u3};
    return T;
}

std::map<std::string, TypeTables> build() {
    std::map<std::string, TypeTables> m;
    for (long p : {2L, 3L, 5L, 7L, 13L}) m["L2_" + std::to_string(p)] = l2_genus0(p);
    for (long p : {11L, 17L, 19L, 37L, 43L, 67L, 163L}) m["L2_" + std::to_string(p)] = l2_genus1(p);
    m["L3_9"] = l3(3);
    m["L3_25"] = l3(5);
    m["L4"] = l4();
    m["R4_6"] = r4_6();
    m["R4_10"] = r4_10();
    m["R4_14"] = r4_genus1(2, 7, 7, v({1, 1, 7, 7}));
    m["R4_15"] = r4_genus1(3, 5, 5, v({1, 1, 5, 5}));
    m["R4_21"] = r4_genus1(3, 7, 3, v({1, 3, 1, 3}));
    m["R6"] = r6();
    m["T4"] = t4();
    m["T6"] = t6();
    m["T8"] = t8();
    m["S8"] = s8();
    return m;
}

}  // namespace

const TypeTables& type_tables(const GraphType& g) {
    static const std::map<std::string, TypeTables> tables = build();
    const auto it = tables.find(g.tag());
    if (it == tables.end()) throw InternalError("no tables for type " + g.tag());
    return it->second;
}

}  // namespace isotwist::detail
