#pragma once

#include "resemblance/nu_engine.hpp"

#include <string>
#include <vector>

namespace resemblance {

struct Budget {
    int terms = 6;
    int coeff = 8;
    size_t max_universe = 200000;
    size_t max_nodes = 2000000;
    size_t max_results = 10000;
};

struct Universe {
    std::vector<Ordinal> items;  // ascending
    bool truncated = false;
};

// every ordinal below bound whose CNF has at most budget.terms terms with coefficients <= budget.coeff
Universe enumerate_universe(const Ordinal& bound, const Budget& budget, int eps_depth);

struct FinitePattern {
    size_t n = 0;
    std::vector<Ordinal> values;
    std::vector<Ordinal> rem_labels;
    std::vector<bool> divisible;
    std::vector<std::vector<Tri>> le1, le2;
};

FinitePattern extract_pattern(const Calculus& c, const ClosedSet& s);
std::vector<std::string> check_axioms(const FinitePattern& p);

enum class Iso { Isomorphic, Distinct, Inconclusive };
const char* iso_name(Iso i);
Iso iso_check(const Calculus& c, const std::vector<Ordinal>& a, const std::vector<Ordinal>& b);

struct SearchResult {
    std::vector<CoveringMap> coverings;
    std::vector<std::vector<Ordinal>> undetermined;  // candidates whose certification needed an unsettled verdict
    bool truncated = false;
};
SearchResult covering_search(const Calculus& c, const ClosedSet& y, const Ordinal& bound, const Budget& budget);

std::string to_dot(const FinitePattern& p);

RelationOracle oracle_of(const Calculus& c);

} // namespace resemblance
