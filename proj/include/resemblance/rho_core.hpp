#pragma once

#include "resemblance/ordinal.hpp"

#include <functional>
#include <string>
#include <vector>

namespace resemblance {

enum class Tri { False, True, Undetermined };
const char* tri_name(Tri t);

class ClosedSet {
public:
    ClosedSet() = default;
    // throws DomainNotClosed unless the sorted set is f0-closed
    ClosedSet(std::vector<Ordinal> members, const Ordinal& rho);

    const std::vector<Ordinal>& members() const { return m_; }
    size_t size() const { return m_.size(); }
    bool empty() const { return m_.empty(); }
    const Ordinal& operator[](size_t i) const { return m_[i]; }
    const Ordinal& max() const { return m_.back(); }

private:
    std::vector<Ordinal> m_;
};

enum class Level { EmbeddingOnly, Covering };

struct CoveringMap {
    ClosedSet domain;
    std::vector<Ordinal> image;
    Level level = Level::EmbeddingOnly;
};

Ordinal f_xi(const Ordinal& xi, const Ordinal& a, const Ordinal& rho);
std::vector<Ordinal> sort_unique(std::vector<Ordinal> s);
bool is_closed(const std::vector<Ordinal>& s, const Ordinal& rho);
ClosedSet closure(std::vector<Ordinal> s, const Ordinal& rho);

struct EmbeddingResult {
    std::optional<CoveringMap> map;
    std::vector<std::string> reasons;
};
EmbeddingResult check_embedding(const std::vector<Ordinal>& domain, const std::vector<Ordinal>& image,
                                const Ordinal& rho);
// pointwise form: h(s+x) = h(s)+x with h(s) divisible
bool check_embedding_pointwise(const std::vector<Ordinal>& domain, const std::vector<Ordinal>& image,
                               const Ordinal& rho);
CoveringMap extend_embedding(const std::vector<std::pair<Ordinal, Ordinal>>& h, const ClosedSet& x,
                             const Ordinal& rho);
// empty string when fine, else a description of the violation
std::string least_moved_check(const CoveringMap& h, const Ordinal& rho);
CoveringMap compose(const CoveringMap& g, const CoveringMap& h, const Ordinal& rho);

// k is 1 or 2
using RelationOracle = std::function<Tri(int k, const Ordinal&, const Ordinal&)>;

struct Certification {
    Tri verdict;
    std::vector<std::string> reasons;
};
Certification certify_covering(const CoveringMap& h, const RelationOracle& le, const Ordinal& rho);

} // namespace resemblance
