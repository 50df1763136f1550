#include "resemblance/rho_core.hpp"

#include <algorithm>
#include <map>

namespace resemblance {

const char* tri_name(Tri t) {
    switch (t) {
    case Tri::True: return "True";
    case Tri::False: return "False";
    default: return "Undetermined";
    }
}

std::vector<Ordinal> sort_unique(std::vector<Ordinal> s) {
    std::sort(s.begin(), s.end(), OrdLess{});
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_closed(const std::vector<Ordinal>& s, const Ordinal& rho) {
    for (const auto& x : s) {
        auto sp = rho_split(x, rho);
        if (!sp.rem.is_zero() && !std::binary_search(s.begin(), s.end(), sp.q, OrdLess{})) return false;
    }
    return true;
}

ClosedSet::ClosedSet(std::vector<Ordinal> members, const Ordinal& rho) : m_(sort_unique(std::move(members))) {
    if (!is_closed(m_, rho)) throw Error("DomainNotClosed", "set is not closed under f0");
}

Ordinal f_xi(const Ordinal& xi, const Ordinal& a, const Ordinal& rho) {
    if (compare(xi, rho) >= 0) throw Error("XiOutOfRange", format(xi) + " >= rho");
    auto sp = rho_split(a, rho);
    return sp.rem.is_zero() ? add(sp.q, xi) : sp.q;
}

ClosedSet closure(std::vector<Ordinal> s, const Ordinal& rho) {
    size_t n = s.size();
    for (size_t i = 0; i < n; ++i) {
        auto sp = rho_split(s[i], rho);
        if (!sp.rem.is_zero()) s.push_back(sp.q);
    }
    return ClosedSet(std::move(s), rho);
}

EmbeddingResult check_embedding(const std::vector<Ordinal>& domain, const std::vector<Ordinal>& image,
                                const Ordinal& rho) {
    if (!is_closed(domain, rho) || sort_unique(domain) != domain)
        throw Error("DomainNotClosed", "domain is not a sorted closed set");
    EmbeddingResult r;
    if (domain.size() != image.size()) {
        r.reasons.push_back("size mismatch");
        return r;
    }
    for (size_t i = 0; i + 1 < image.size(); ++i)
        if (compare(image[i], image[i + 1]) >= 0)
            r.reasons.push_back("order not preserved at " + format(domain[i]) + " < " + format(domain[i + 1]));
    for (size_t i = 0; i < image.size(); ++i) {
        Ordinal a = rho_split(domain[i], rho).rem, b = rho_split(image[i], rho).rem;
        if (a != b)
            r.reasons.push_back("remainder changes at " + format(domain[i]) + ": " + format(a) + " -> " + format(b));
    }
    if (!is_closed(sort_unique(image), rho)) r.reasons.push_back("image not closed");
    if (r.reasons.empty()) r.map = CoveringMap{ClosedSet(domain, rho), image, Level::EmbeddingOnly};
    return r;
}

bool check_embedding_pointwise(const std::vector<Ordinal>& domain, const std::vector<Ordinal>& image,
                               const Ordinal& rho) {
    if (domain.size() != image.size()) return false;
    for (size_t i = 0; i + 1 < image.size(); ++i)
        if (compare(image[i], image[i + 1]) >= 0) return false;
    for (size_t i = 0; i < domain.size(); ++i) {
        auto sp = rho_split(domain[i], rho);
        if (sp.rem.is_zero()) {
            if (!divisible(image[i], rho)) return false;
            continue;
        }
        auto it = std::find(domain.begin(), domain.end(), sp.q);
        if (it == domain.end()) return false;
        const Ordinal& base = image[it - domain.begin()];
        if (!divisible(base, rho) || add(base, sp.rem) != image[i]) return false;
    }
    return true;
}

CoveringMap extend_embedding(const std::vector<std::pair<Ordinal, Ordinal>>& h, const ClosedSet& x,
                             const Ordinal& rho) {
    std::map<Ordinal, Ordinal, OrdLess> hm;
    for (const auto& [a, b] : h) {
        if (!divisible(b, rho)) throw Error("ImageNotDivisible", format(a) + " -> " + format(b));
        hm[a] = b;
    }
    std::vector<Ordinal> image;
    for (const auto& m : x.members()) {
        auto sp = rho_split(m, rho);
        auto it = hm.find(sp.q);
        if (it == hm.end()) throw Error("ImageNotDivisible", "no image for " + format(sp.q));
        image.push_back(sp.rem.is_zero() ? it->second : add(it->second, sp.rem));
    }
    for (size_t i = 0; i + 1 < image.size(); ++i)
        if (compare(image[i], image[i + 1]) >= 0) throw Error("ImageNotDivisible", "map is not order preserving");
    return CoveringMap{x, image, Level::EmbeddingOnly};
}

std::string least_moved_check(const CoveringMap& h, const Ordinal& rho) {
    for (size_t i = 0; i < h.image.size(); ++i) {
        if (h.domain[i] == h.image[i]) continue;
        if (!divisible(h.domain[i], rho)) return "least moved point " + format(h.domain[i]) + " is not divisible";
        return "";
    }
    return "";
}

CoveringMap compose(const CoveringMap& g, const CoveringMap& h, const Ordinal& rho) {
    std::vector<Ordinal> img;
    for (const auto& y : h.image) {
        auto it = std::lower_bound(g.domain.members().begin(), g.domain.members().end(), y, OrdLess{});
        if (it == g.domain.members().end() || *it != y) throw Error("Domain", "composition outside domain");
        img.push_back(g.image[it - g.domain.members().begin()]);
    }
    auto lv = (g.level == Level::Covering && h.level == Level::Covering) ? Level::Covering : Level::EmbeddingOnly;
    (void)rho;
    return CoveringMap{h.domain, img, lv};
}

Certification certify_covering(const CoveringMap& h, const RelationOracle& le, const Ordinal& rho) {
    Certification c{Tri::True, {}};
    auto emb = check_embedding(h.domain.members(), h.image, rho);
    if (!emb.map) return {Tri::False, emb.reasons};
    const auto& d = h.domain.members();
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j)
            for (int k = 1; k <= 2; ++k) {
                Tri src = le(k, d[i], d[j]);
                if (src == Tri::False) continue;
                Tri dst = le(k, h.image[i], h.image[j]);
                if (dst == Tri::True) continue;
                std::string what = "<=" + std::to_string(k) + " " + format(d[i]) + ", " + format(d[j]);
                if (src == Tri::True && dst == Tri::False) {
                    c.verdict = Tri::False;
                    c.reasons.push_back(what + " not preserved");
                } else if (c.verdict != Tri::False) {
                    c.verdict = Tri::Undetermined;
                    c.reasons.push_back(what + " undetermined");
                }
            }
    return c;
}

} // namespace resemblance
