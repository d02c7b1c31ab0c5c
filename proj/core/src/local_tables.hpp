#pragma once

#include "isotwist/localdata.hpp"

#include <vector>

namespace isotwist::detail {

enum class BoundKind { Eq, Ge, Range };

struct Bound {
    BoundKind kind;
    int lo;
    int hi;  // Range only, inclusive
    bool matches(const Val& v) const;
};

enum class Cond { C2a, C2b, C2c, C2d, C2e, C2f, C2g, C3a, C3b };

const char* cond_label(Cond c);

struct Literal {
    Cond cond;
    bool positive;
};

// One cell of a u_p(E^d) column.
struct PalCell {
    enum class Kind { Fixed, PrimeP, OneOrTwo, FourOrTwo } kind;
    long num;
    long den;
};

struct LocalRow {
    const char* pattern;
    Bound c4, c6, delta;
    std::vector<Literal> literals;
    bool non_minimal;  // the "(+)(u=p)" rows
    KodairaKind kind;
    int n_fixed;  // Kodaira index when n_base < 0
    int n_base;   // Kodaira index = v(delta) - n_base when >= 0
    // p odd: {d = 0 (p), d != 0 (p)}; p = 2: {d = 1, 2, 3 (4)}.
    std::vector<PalCell> pal;
};

// Table for p >= 5, p = 3 or p = 2.
const std::vector<LocalRow>& local_table(long p);

}  // namespace isotwist::detail
