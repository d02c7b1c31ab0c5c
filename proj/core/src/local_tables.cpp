#include "local_tables.hpp"

namespace isotwist::detail {

bool Bound::matches(const Val& v) const {
    switch (kind) {
        case BoundKind::Eq:
            return v.is_finite() && v.value() == lo;
        case BoundKind::Ge:
            return v >= Val(lo);
        case BoundKind::Range:
            return v.is_finite() && v.value() >= lo && v.value() <= hi;
    }
    return false;
}

const char* cond_label(Cond c) {
    switch (c) {
        case Cond::C2a: return "2a";
        case Cond::C2b: return "2b";
        case Cond::C2c: return "2c";
        case Cond::C2d: return "2d";
        case Cond::C2e: return "2e";
        case Cond::C2f: return "2f";
        case Cond::C2g: return "2g";
        case Cond::C3a: return "3a";
        case Cond::C3b: return "3b";
    }
    return "?";
}

namespace {

using K = KodairaKind;

Bound eq(int k) { return {BoundKind::Eq, k, k}; }
Bound ge(int k) { return {BoundKind::Ge, k, k}; }
Bound range(int lo, int hi) { return {BoundKind::Range, lo, hi}; }

Literal yes(Cond c) { return {c, true}; }
Literal no(Cond c) { return {c, false}; }

PalCell one() { return {PalCell::Kind::Fixed, 1, 1}; }
PalCell two() { return {PalCell::Kind::Fixed, 2, 1}; }
PalCell half() { return {PalCell::Kind::Fixed, 1, 2}; }
PalCell pp() { return {PalCell::Kind::PrimeP, 0, 1}; }
PalCell one_or_two() { return {PalCell::Kind::OneOrTwo, 0, 1}; }
PalCell four_or_two() { return {PalCell::Kind::FourOrTwo, 0, 1}; }

LocalRow row(const char* pattern, Bound c4, Bound c6, Bound d, std::vector<Literal> lits, K kind,
             std::vector<PalCell> pal, int n_fixed = 0, int n_base = -1) {
    return LocalRow{pattern, c4, c6, d, std::move(lits), false, kind, n_fixed, n_base, std::move(pal)};
}

LocalRow plus(const char* pattern, Bound c4, Bound c6, Bound d, std::vector<Literal> lits = {}) {
    return LocalRow{pattern, c4, c6, d, std::move(lits), true, K::I0, 0, -1, {}};
}

std::vector<LocalRow> table_large() {
    const std::vector<PalCell> u1{one(), one()};
    const std::vector<PalCell> up{pp(), one()};
    return {
        row("(0,>=0,0)", eq(0), ge(0), eq(0), {}, K::I0, u1),
        row("(>=0,0,0)", ge(0), eq(0), eq(0), {}, K::I0, u1),
        row("(>=0,0,n)", ge(0), eq(0), ge(1), {}, K::In, u1, 0, 0),
        row("(>=1,1,2)", ge(1), eq(1), eq(2), {}, K::II, u1),
        row("(1,>=2,3)", eq(1), ge(2), eq(3), {}, K::III, u1),
        row("(>=2,2,4)", ge(2), eq(2), eq(4), {}, K::IV, u1),
        row("(2,>=3,6)", eq(2), ge(3), eq(6), {}, K::I0star, up),
        row("(>=2,3,6)", ge(2), eq(3), eq(6), {}, K::I0star, up),
        row("(2,3,6+n)", eq(2), eq(3), ge(7), {}, K::Instar, up, 0, 6),
        row("(>=3,4,8)", ge(3), eq(4), eq(8), {}, K::IVstar, up),
        row("(3,>=5,9)", eq(3), ge(5), eq(9), {}, K::IIIstar, up),
        row("(>=4,5,10)", ge(4), eq(5), eq(10), {}, K::IIstar, up),
        plus("(>=4,>=6,>=12)", ge(4), ge(6), ge(12)),
    };
}

std::vector<LocalRow> table_three() {
    const std::vector<PalCell> u1{one(), one()};
    const std::vector<PalCell> u3{pp(), one()};
    using C = Cond;
    return {
        row("(0,0,n)", eq(0), eq(0), ge(0), {}, K::In, u1, 0, 0),
        row("(1,>=3,0)", eq(1), ge(3), eq(0), {}, K::I0, u1),
        row("(>=2,3,3)", ge(2), eq(3), eq(3), {yes(C::C3a)}, K::III, u1),
        row("(>=2,3,3)", ge(2), eq(3), eq(3), {no(C::C3a)}, K::II, u1),
        row("(2,3,4)", eq(2), eq(3), eq(4), {}, K::II, u1),
        row("(2,3,5)", eq(2), eq(3), eq(5), {}, K::IV, u1),
        row("(2,3,6+n)", eq(2), eq(3), ge(6), {}, K::Instar, u3, 0, 6),
        row("(2,4,3)", eq(2), eq(4), eq(3), {}, K::II, u1),
        row("(2,>=5,3)", eq(2), ge(5), eq(3), {}, K::III, u1),
        row("(>=3,4,5)", ge(3), eq(4), eq(5), {}, K::II, u1),
        row("(3,5,6)", eq(3), eq(5), eq(6), {}, K::IV, u1),
        row("(3,>=6,6)", eq(3), ge(6), eq(6), {}, K::I0star, u3),
        row("(>=4,5,7)", ge(4), eq(5), eq(7), {}, K::IV, u1),
        row("(>=4,6,9)", ge(4), eq(6), eq(9), {yes(C::C3b)}, K::IIIstar, u3),
        row("(>=4,6,9)", ge(4), eq(6), eq(9), {no(C::C3b)}, K::IVstar, u3),
        row("(4,6,10)", eq(4), eq(6), eq(10), {}, K::IVstar, u3),
        row("(4,6,11)", eq(4), eq(6), eq(11), {}, K::IIstar, u3),
        plus("(4,6,12+n)", eq(4), eq(6), ge(12)),
        row("(4,7,9)", eq(4), eq(7), eq(9), {}, K::IVstar, u3),
        row("(4,>=8,9)", eq(4), ge(8), eq(9), {}, K::IIIstar, u3),
        row("(>=5,7,11)", ge(5), eq(7), eq(11), {}, K::IVstar, u3),
        row("(5,8,12)", eq(5), eq(8), eq(12), {}, K::IIstar, u3),
        plus("(5,>=9,12)", eq(5), ge(9), eq(12)),
        row("(>=6,8,13)", ge(6), eq(8), eq(13), {}, K::IIstar, u3),
        plus("(>=6,>=9,>=15)", ge(6), ge(9), ge(15)),
    };
}

std::vector<LocalRow> table_two() {
    const std::vector<PalCell> u111{one(), one(), one()};
    const std::vector<PalCell> u121{one(), two(), one()};
    using C = Cond;
    return {
        row("(0,0,n)", eq(0), eq(0), ge(0), {}, K::In, {one(), half(), half()}, 0, 0),
        row("(>=4,3,0)", ge(4), eq(3), eq(0), {}, K::I0, {one(), one(), half()}),
        row("(4,5,4)", eq(4), eq(5), eq(4), {yes(C::C2a)}, K::II, u111),
        row("(4,5,4)", eq(4), eq(5), eq(4), {no(C::C2a), yes(C::C2b)}, K::III, u111),
        row("(4,5,4)", eq(4), eq(5), eq(4), {no(C::C2a), no(C::C2b)}, K::IV, u111),
        row("(4,>=6,6)", eq(4), ge(6), eq(6), {yes(C::C2a)}, K::II, u111),
        row("(4,>=6,6)", eq(4), ge(6), eq(6), {no(C::C2a)}, K::III, u111),
        row("(4,6,7)", eq(4), eq(6), eq(7), {}, K::II, u111),
        row("(4,6,8)", eq(4), eq(6), eq(8), {yes(C::C2c)}, K::I0star, u111),
        row("(4,6,8)", eq(4), eq(6), eq(8), {no(C::C2c), yes(C::C2d)}, K::Instar, u111, 1),
        row("(4,6,8)", eq(4), eq(6), eq(8), {no(C::C2c), no(C::C2d)}, K::IVstar, u111),
        row("(4,6,9)", eq(4), eq(6), eq(9), {}, K::I0star, u111),
        row("(4,6,10)", eq(4), eq(6), eq(10), {yes(C::C2d)}, K::Instar, u111, 2),
        row("(4,6,10)", eq(4), eq(6), eq(10), {no(C::C2d)}, K::IIIstar, u111),
        row("(4,6,11)", eq(4), eq(6), eq(11), {yes(C::C2d)}, K::Instar, u111, 3),
        row("(4,6,11)", eq(4), eq(6), eq(11), {no(C::C2d)}, K::IIstar, u111),
        row("(4,6,12+n)", eq(4), eq(6), ge(12), {yes(C::C2f)}, K::Instar, {one(), one(), two()}, 0, 8),
        plus("(4,6,12+n)", eq(4), eq(6), ge(12), {no(C::C2f)}),
        row("(5,5,4)", eq(5), eq(5), eq(4), {yes(C::C2a)}, K::II, u111),
        row("(5,5,4)", eq(5), eq(5), eq(4), {no(C::C2a)}, K::III, u111),
        row("(5,6,6)", eq(5), eq(6), eq(6), {}, K::II, u111),
        row("(>=6,6,6)", ge(6), eq(6), eq(6), {}, K::II, {one(), one_or_two(), one()}),
        row("(5,7,8)", eq(5), eq(7), eq(8), {}, K::III, u111),
        row("(5,>=8,9)", eq(5), ge(8), eq(9), {}, K::III, u111),
        row("(>=6,5,4)", ge(6), eq(5), eq(4), {yes(C::C2a)}, K::II, u111),
        row("(>=6,5,4)", ge(6), eq(5), eq(4), {no(C::C2a)}, K::IV, u111),
        row("(6,7,8)", eq(6), eq(7), eq(8), {yes(C::C2c)}, K::I0star, u111),
        row("(6,7,8)", eq(6), eq(7), eq(8), {no(C::C2c)}, K::Instar, u111, 1),
        row("(>=6,8,10)", ge(6), eq(8), eq(10), {}, K::I0star, u121),
        row("(6,9,13)", eq(6), eq(9), eq(13), {}, K::Instar, u121, 2),
        row("(6,9,14+n),n<4", eq(6), eq(9), range(14, 17), {}, K::Instar, u121, 0, 10),
        row("(6,9,18+n)", eq(6), eq(9), ge(18), {}, K::Instar, {one(), four_or_two(), one()}, 0, 10),
        row("(6,>=9,12)", eq(6), ge(9), eq(12), {yes(C::C2e)}, K::Instar, u121, 2),
        row("(6,>=9,12)", eq(6), ge(9), eq(12), {no(C::C2e)}, K::Instar, u121, 3),
        row("(>=7,7,8)", ge(7), eq(7), eq(8), {yes(C::C2c)}, K::I0star, u111),
        row("(>=7,7,8)", ge(7), eq(7), eq(8), {no(C::C2c)}, K::IVstar, u111),
        row("(7,9,12)", eq(7), eq(9), eq(12), {}, K::IIIstar, u121),
        row("(7,10,14)", eq(7), eq(10), eq(14), {}, K::IIIstar, u121),
        row("(7,>=11,15)", eq(7), ge(11), eq(15), {}, K::IIIstar, u121),
        row("(>=8,9,12)", ge(8), eq(9), eq(12), {yes(C::C2g)}, K::IIstar, {one(), two(), two()}),
        plus("(>=8,9,12)", ge(8), eq(9), eq(12), {no(C::C2g)}),
        row("(>=8,10,14)", ge(8), eq(10), eq(14), {}, K::IIstar, u121),
        plus("(>=8,>=11,>=16)", ge(8), ge(11), ge(16)),
    };
}

}  // namespace

const std::vector<LocalRow>& local_table(long p) {
    static const std::vector<LocalRow> large = table_large();
    static const std::vector<LocalRow> three = table_three();
    static const std::vector<LocalRow> two = table_two();
    if (p == 2) return two;
    if (p == 3) return three;
    return large;
}

}  // namespace isotwist::detail
