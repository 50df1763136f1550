#pragma once

#include "resemblance/pattern_oracle.hpp"

namespace resemblance {

struct IndexedSet {
    ClosedSet base;
    std::vector<Ordinal> indices;
};

IndexedSet indexed(const Calculus& c, const ClosedSet& x);

CoveringMap incompressible_cover(const Calculus& c, const ClosedSet& x);

// numbers of the violated clauses of the index-set hypothesis
std::vector<int> index_set_violations(const Calculus& c, const std::vector<Ordinal>& k);
std::vector<Ordinal> close_index_set(const Calculus& c, std::vector<Ordinal> k);
IndexedSet build_from_index_set(const Calculus& c, const std::vector<Ordinal>& k);
IndexedSet extend_incompressible(const Calculus& c, const std::vector<Ordinal>& x);

struct VerifyResult {
    enum Kind { Confirmed, Counterexample, Inconclusive } kind = Inconclusive;
    std::optional<CoveringMap> witness;
    std::string note;
    size_t nodes = 0;
};
const char* verify_name(VerifyResult::Kind k);
VerifyResult verify_incompressible(const Calculus& c, const ClosedSet& x, const Budget& budget);

} // namespace resemblance
