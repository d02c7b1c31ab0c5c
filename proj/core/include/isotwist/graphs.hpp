#pragma once

#include "isotwist/exactnum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isotwist {

enum class GraphShape { L2, L3, L4, R4, R6, T4, T6, T8, S8 };

// A type of rational isogeny graph. `level` is p for L2(p), p^2 for L3(p^2), pq for R4(pq)
// and 0 for the remaining shapes.
struct GraphType {
    GraphShape shape = GraphShape::L2;
    long level = 0;

    // Underscore tags: "L2_11", "L3_9", "L4", "R4_10", "R6", "T4", "T6", "T8", "S8".
    static GraphType parse(const std::string& tag);
    std::string tag() const;
    // Printed form used in tables and reports, e.g. "L2(11)", "R4(10)", "T8".
    std::string name() const;

    // Types whose modular curve has genus >= 1; these take no parameter t.
    bool genus_ge_1() const;
    // Primes dividing some isogeny degree in the graph.
    std::vector<long> primes() const;

    static const std::vector<GraphType>& all();

    friend bool operator==(const GraphType&, const GraphType&) = default;
};

struct Edge {
    std::size_t a;
    std::size_t b;
    long degree;
};

struct GraphStructure {
    std::vector<std::string> vertices;  // order of the volume and u-vectors
    std::vector<Edge> edges;
};

const GraphStructure& graph_structure(const GraphType& g);

// Projective volume vector with first entry 1.
std::vector<Rat> volume_vector(const GraphType& g);

// Optional parameter: a rational t for genus-0 types, empty for genus >= 1 types.
using GraphParam = std::optional<Rat>;

struct UVectors {
    std::vector<Rat> uE;
    std::vector<Rat> uEd;
    std::vector<std::string> t_branches;  // one matched t-row per sub-table
    std::string d_condition;              // conjunction of the matched d-conditions
};

UVectors u_vectors(const GraphType& g, const GraphParam& t, const mpz_class& d);

// Argmax of uEd_i^2 uE_i^2 v_i; a tie raises InternalError.
std::string faltings_by_volumes(const GraphType& g, const GraphParam& t, const mpz_class& d);

struct FaltingsResult {
    std::string vertex;
    std::string t_branch;     // printed t-condition of the row, "genus>=1" when absent
    std::string d_condition;  // "all", "d≡0(3)", "d≢0(3)"
    Rat probability;
};

FaltingsResult faltings_by_theorem(const GraphType& g, const GraphParam& t, const mpz_class& d);

// All rows for the given parameter; the probabilities sum to 1.
std::vector<FaltingsResult> prob_table(const GraphType& g, const GraphParam& t);

// Proportion of square-free integers divisible (or not) by p: 1/(1+p) and p/(1+p).
Rat probability_of_branch(long p, bool divisible);

// Descriptions of the printed t-conditions of the theorem table for g, in row order.
std::vector<std::string> theorem_t_branches(const GraphType& g);
// Same for the rule table; one list per sub-table (one per prime for R4, R6, S8).
std::vector<std::vector<std::string>> rule_t_branches(const GraphType& g);

// Whether t satisfies the printed t-condition `branch` of g (as returned above).
bool satisfies_branch(const GraphType& g, const std::string& branch, const Rat& t);

// Throws InputError if t is a cusp or otherwise excluded for g.
void check_parameter(const GraphType& g, const GraphParam& t);

}  // namespace isotwist
