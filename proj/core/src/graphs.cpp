#include "isotwist/graphs.hpp"

#include "graph_tables.hpp"
#include "isotwist/errors.hpp"

#include <map>
#include <set>

namespace isotwist {

using detail::TCond;
using detail::type_tables;

namespace {

const std::vector<long> kL2{2, 3, 5, 7, 11, 13, 17, 19, 37, 43, 67, 163};
const std::vector<long> kR4{6, 10, 14, 15, 21};

std::pair<long, long> r4_primes(long level) {
    switch (level) {
        case 6: return {2, 3};
        case 10: return {2, 5};
        case 14: return {2, 7};
        case 15: return {3, 5};
        case 21: return {3, 7};
        default: throw InternalError("bad R4 level " + std::to_string(level));
    }
}

bool contains(const std::vector<long>& xs, long x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

void require_squarefree(const mpz_class& d) {
    if (d == 0 || !is_squarefree(d)) throw InputError("d=" + d.get_str() + " is not square-free");
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        if (s == "all" || s == "genus≥1") continue;
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out.empty() ? (parts.empty() ? "all" : parts.front()) : out;
}

}  // namespace

GraphType GraphType::parse(const std::string& tag) {
    auto bad = [&tag]() { return InputError("unknown type tag '" + tag + "'"); };
    auto level_of = [&](std::size_t prefix) {
        const std::string rest = tag.substr(prefix);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) throw bad();
        return std::stol(rest);
    };
    if (tag.rfind("L2_", 0) == 0) {
        const long p = level_of(3);
        if (!contains(kL2, p)) throw bad();
        return {GraphShape::L2, p};
    }
    if (tag == "L3_9") return {GraphShape::L3, 9};
    if (tag == "L3_25") return {GraphShape::L3, 25};
    if (tag == "L4") return {GraphShape::L4, 0};
    if (tag.rfind("R4_", 0) == 0) {
        const long n = level_of(3);
        if (!contains(kR4, n)) throw bad();
        return {GraphShape::R4, n};
    }
    if (tag == "R6") return {GraphShape::R6, 0};
    if (tag == "T4") return {GraphShape::T4, 0};
    if (tag == "T6") return {GraphShape::T6, 0};
    if (tag == "T8") return {GraphShape::T8, 0};
    if (tag == "S8") return {GraphShape::S8, 0};
    throw bad();
}

std::string GraphType::tag() const {
    switch (shape) {
        case GraphShape::L2: return "L2_" + std::to_string(level);
        case GraphShape::L3: return "L3_" + std::to_string(level);
        case GraphShape::L4: return "L4";
        case GraphShape::R4: return "R4_" + std::to_string(level);
        case GraphShape::R6: return "R6";
        case GraphShape::T4: return "T4";
        case GraphShape::T6: return "T6";
        case GraphShape::T8: return "T8";
        case GraphShape::S8: return "S8";
    }
    return "?";
}

std::string GraphType::name() const {
    const std::string t = tag();
    const auto us = t.find('_');
    if (us == std::string::npos) return t;
    return t.substr(0, us) + "(" + t.substr(us + 1) + ")";
}

bool GraphType::genus_ge_1() const {
    switch (shape) {
        case GraphShape::L2: return contains({11, 17, 19, 37, 43, 67, 163}, level);
        case GraphShape::L4: return true;
        case GraphShape::R4: return level == 14 || level == 15 || level == 21;
        default: return false;
    }
}

std::vector<long> GraphType::primes() const {
    switch (shape) {
        case GraphShape::L2: return {level};
        case GraphShape::L3: return {level == 9 ? 3L : 5L};
        case GraphShape::L4: return {3};
        case GraphShape::R4: {
            const auto [p, q] = r4_primes(level);
            return {p, q};
        }
        case GraphShape::R6:
        case GraphShape::S8: return {2, 3};
        default: return {2};
    }
}

const std::vector<GraphType>& GraphType::all() {
    static const std::vector<GraphType> types = [] {
        std::vector<GraphType> out;
        for (long p : kL2) out.push_back({GraphShape::L2, p});
        out.push_back({GraphShape::L3, 9});
        out.push_back({GraphShape::L3, 25});
        out.push_back({GraphShape::L4, 0});
        for (long n : kR4) out.push_back({GraphShape::R4, n});
        for (GraphShape s : {GraphShape::R6, GraphShape::T4, GraphShape::T6, GraphShape::T8, GraphShape::S8}) {
            out.push_back({s, 0});
        }
        return out;
    }();
    return types;
}

const GraphStructure& graph_structure(const GraphType& g) {
    static const std::map<std::string, GraphStructure> cache = [] {
        std::map<std::string, GraphStructure> m;
        for (const auto& t : GraphType::all()) {
            const auto& tables = type_tables(t);
            m[t.tag()] = GraphStructure{tables.vertices, tables.edges};
        }
        return m;
    }();
    return cache.at(g.tag());
}

std::vector<Rat> volume_vector(const GraphType& g) { return type_tables(g).volumes; }

void check_parameter(const GraphType& g, const GraphParam& t) {
    if (g.genus_ge_1()) {
        if (t) throw InputError("type " + g.tag() + " has genus >= 1 and takes no parameter t");
        return;
    }
    if (!t) throw InputError("type " + g.tag() + " needs a parameter t");
    if (t->is_zero()) throw InputError("t=0 is a cusp");
    // At these points the printed shifted valuation is infinite (j = 1728 and j = 0).
    if (g == GraphType{GraphShape::L2, 2} && *t == Rat(-64)) {
        throw InputError("t=-64 is not covered: v_2(t+64) is infinite");
    }
    if (g == GraphType{GraphShape::L2, 3} && *t == Rat(-27)) {
        throw InputError("t=-27 is not covered: v_3(t+27) is infinite");
    }
}

UVectors u_vectors(const GraphType& g, const GraphParam& t, const mpz_class& d) {
    check_parameter(g, t);
    require_squarefree(d);
    const auto& tables = type_tables(g);
    const std::size_t n = tables.vertices.size();
    UVectors out{std::vector<Rat>(n, Rat(1)), std::vector<Rat>(n, Rat(1)), {}, {}};
    std::vector<std::string> dconds;
    for (const auto& block : tables.rules) {
        const detail::RuleRow* hit = nullptr;
        for (const auto& row : block.rows) {
            if (t && !detail::satisfies(row.t, *t)) continue;
            if (hit) throw InternalError(g.name() + ": overlapping rule rows '" + hit->t.text + "' and '" + row.t.text + "'");
            hit = &row;
        }
        if (!hit) throw InternalError(g.name() + ": no rule row covers t=" + t->str());
        const detail::RuleEntry* entry = nullptr;
        for (const auto& e : hit->entries) {
            if (!e.d.matches(d)) continue;
            if (entry) throw InternalError(g.name() + ": overlapping d-conditions in rule row '" + hit->t.text + "'");
            entry = &e;
        }
        if (!entry) throw InternalError(g.name() + ": no d-condition of rule row '" + hit->t.text + "' covers d");
        for (std::size_t i = 0; i < n; ++i) {
            out.uE[i] *= hit->uE[i];
            out.uEd[i] *= entry->uEd[i];
        }
        out.t_branches.push_back(hit->t.text);
        dconds.push_back(entry->d.str());
    }
    out.d_condition = join(dconds);
    return out;
}

std::string faltings_by_volumes(const GraphType& g, const GraphParam& t, const mpz_class& d) {
    const UVectors u = u_vectors(g, t, d);
    const auto& tables = type_tables(g);
    std::size_t best = 0;
    Rat best_value(0);
    bool tie = false;
    for (std::size_t i = 0; i < tables.vertices.size(); ++i) {
        const Rat value = u.uEd[i] * u.uEd[i] * u.uE[i] * u.uE[i] * tables.volumes[i];
        if (i == 0 || value > best_value) {
            best = i;
            best_value = value;
            tie = false;
        } else if (value == best_value) {
            tie = true;
        }
    }
    if (tie) {
        std::string who;
        for (std::size_t i = 0; i < tables.vertices.size(); ++i) {
            const Rat value = u.uEd[i] * u.uEd[i] * u.uE[i] * u.uE[i] * tables.volumes[i];
            if (value == best_value) who += (who.empty() ? "" : ", ") + tables.vertices[i];
        }
        throw InternalError(g.name() + ": volume tie between " + who);
    }
    return tables.vertices[best];
}

FaltingsResult faltings_by_theorem(const GraphType& g, const GraphParam& t, const mpz_class& d) {
    check_parameter(g, t);
    require_squarefree(d);
    const detail::TheoremRow* hit = nullptr;
    for (const auto& row : type_tables(g).theorem) {
        if (t && !detail::satisfies(row.t, *t)) continue;
        if (!row.d.matches(d)) continue;
        if (hit) throw InternalError(g.name() + ": overlapping theorem rows");
        hit = &row;
    }
    if (!hit) {
        throw InternalError(g.name() + ": no theorem row covers t=" + (t ? t->str() : std::string("-")) +
                            ", d=" + d.get_str());
    }
    return {hit->vertex, hit->t.text, hit->d.str(), hit->prob};
}

std::vector<FaltingsResult> prob_table(const GraphType& g, const GraphParam& t) {
    check_parameter(g, t);
    std::vector<FaltingsResult> out;
    Rat total(0);
    for (const auto& row : type_tables(g).theorem) {
        if (t && !detail::satisfies(row.t, *t)) continue;
        out.push_back({row.vertex, row.t.text, row.d.str(), row.prob});
        total += row.prob;
    }
    if (out.empty()) throw InternalError(g.name() + ": no theorem row covers t=" + (t ? t->str() : std::string("-")));
    if (total != Rat(1)) throw InternalError(g.name() + ": branch probabilities sum to " + total.str());
    return out;
}

Rat probability_of_branch(long p, bool divisible) {
    if (p < 2 || !is_prime(mpz_class(p))) throw InputError(std::to_string(p) + " is not prime");
    return divisible ? Rat(mpz_class(1), mpz_class(p + 1)) : Rat(mpz_class(p), mpz_class(p + 1));
}

std::vector<std::string> theorem_t_branches(const GraphType& g) {
    std::vector<std::string> out;
    for (const auto& row : type_tables(g).theorem) {
        if (std::find(out.begin(), out.end(), row.t.text) == out.end()) out.push_back(row.t.text);
    }
    return out;
}

std::vector<std::vector<std::string>> rule_t_branches(const GraphType& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& block : type_tables(g).rules) {
        out.emplace_back();
        for (const auto& row : block.rows) out.back().push_back(row.t.text);
    }
    return out;
}

bool satisfies_branch(const GraphType& g, const std::string& branch, const Rat& t) {
    const auto& tables = type_tables(g);
    for (const auto& row : tables.theorem) {
        if (row.t.text == branch) return detail::satisfies(row.t, t);
    }
    for (const auto& block : tables.rules) {
        for (const auto& row : block.rows) {
            if (row.t.text == branch) return detail::satisfies(row.t, t);
        }
    }
    throw InputError(g.name() + " has no branch '" + branch + "'");
}

}  // namespace isotwist
