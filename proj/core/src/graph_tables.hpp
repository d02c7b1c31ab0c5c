#pragma once

#include "isotwist/graphs.hpp"

#include <climits>
#include <string>
#include <vector>

namespace isotwist::detail {

// One clause of a printed condition on t.
struct TAtom {
    enum class Kind {
        ValRange,  // lo <= v_p(t) <= hi
        ValNe,     // v_p(t) != lo
        ShiftVal,  // v_p(t + shift) mod m in residues
        UnitMod,   // unit part of t mod p^lo in residues
    } kind;
    long p;
    long lo = LONG_MIN;
    long hi = LONG_MAX;
    long shift = 0;
    long m = 0;
    std::vector<long> residues;
};

struct TCond {
    std::string text;
    std::vector<TAtom> atoms;  // conjunction; empty for genus >= 1 types
};

struct DCond {
    enum class Kind { All, Divisible, NotDivisible } kind = Kind::All;
    long p = 0;

    bool matches(const mpz_class& d) const;
    std::string str() const;
};

struct TheoremRow {
    TCond t;
    DCond d;
    std::string vertex;
    Rat prob;
};

struct RuleEntry {
    DCond d;
    std::vector<Rat> uEd;
};

struct RuleRow {
    TCond t;
    std::vector<Rat> uE;
    std::vector<RuleEntry> entries;
};

// One u_p sub-table (or the whole table for single-prime types).
struct RuleBlock {
    std::vector<RuleRow> rows;
};

struct TypeTables {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Rat> volumes;
    std::vector<TheoremRow> theorem;
    std::vector<RuleBlock> rules;
};

const TypeTables& type_tables(const GraphType& g);

bool satisfies(const TCond& c, const Rat& t);

}  // namespace isotwist::detail
