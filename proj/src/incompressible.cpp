#include "resemblance/incompressible.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace resemblance {

namespace {

const Nat kChainCap = 256;

// summands of x as a non-increasing list of indecomposables
std::vector<Ordinal> indecomposable_parts(const Ordinal& x) {
    std::vector<Ordinal> out;
    for (const auto& t : x.terms()) {
        if (t.coeff > kChainCap) throw Error("BudgetExceeded", "coefficient too large to expand");
        for (Nat i = 0; i < t.coeff; ++i) out.push_back(omega_pow(term_exponent(t)));
    }
    return out;
}

struct Node {
    Ordinal value;
    bool anchor = false;
};

struct Cover {
    const Calculus& c;
    std::vector<Node> nodes;

    Tri le(int k, int i, int j) {
        if (i == j) return Tri::True;
        if (nodes[i].anchor || nodes[j].anchor) return Tri::False;
        return k == 1 ? c.le1(nodes[i].value, nodes[j].value).value : le2(c, nodes[i].value, nodes[j].value).value;
    }

    Tri need(int k, int i, int j) {
        Tri t = le(k, i, j);
        if (t == Tri::Undetermined)
            throw Error("Undetermined", "<=" + std::to_string(k) + " between " + format(nodes[i].value) + " and " +
                                            format(nodes[j].value));
        return t;
    }

    // images of ids (ascending by value), same order
    std::vector<Ordinal> run(const std::vector<int>& ids) {
        if (ids.empty()) return {};
        if (ids.size() == 1) return {Ordinal()};
        const Ordinal& rho = c.rho();
        int m = ids[0];
        std::vector<int> s1, s2, s3;
        for (int i : ids)
            if (need(1, m, i) == Tri::True) s1.push_back(i);
        Ordinal top = nodes[s1.back()].value;
        Ordinal lim = add(top, rho);
        for (int i : ids) {
            if (std::find(s1.begin(), s1.end(), i) != s1.end()) continue;
            (compare(nodes[i].value, lim) < 0 ? s2 : s3).push_back(i);
        }
        std::map<int, Ordinal> img;
        if (!s3.empty()) {
            std::vector<int> low = s1;
            low.insert(low.end(), s2.begin(), s2.end());
            std::sort(low.begin(), low.end(), [&](int a, int b) { return compare(nodes[a].value, nodes[b].value) < 0; });
            auto a = run(low);
            auto b = run(s3);
            for (size_t i = 0; i < low.size(); ++i) img[low[i]] = a[i];
            Ordinal shift = add(a.back(), rho);
            for (size_t i = 0; i < s3.size(); ++i) img[s3[i]] = add(shift, b[i]);
        } else if (!s2.empty()) {
            auto a = run(s1);
            for (size_t i = 0; i < s1.size(); ++i) img[s1[i]] = a[i];
            for (int i : s2) {
                auto sp = rho_split(nodes[i].value, rho);
                auto it = std::find_if(s1.begin(), s1.end(), [&](int j) { return nodes[j].value == sp.q; });
                if (it == s1.end()) throw Error("DomainNotClosed", "missing base of " + format(nodes[i].value));
                img[i] = add(img[*it], sp.rem);
            }
        } else {
            for (int i : ids)
                if (i != m && need(2, m, i) == Tri::True)
                    throw Error("Undetermined", "<=2 link from the minimum needs an epsilon component");
            int anchor = (int)nodes.size();
            nodes.push_back(Node{nodes[m].value, true});
            std::vector<int> p{anchor};
            p.insert(p.end(), ids.begin() + 1, ids.end());
            auto sub = run(p);
            Ext beta = c.index(sub.back());
            if (!beta.known()) throw Error("Undetermined", "index of " + format(sub.back()));
            Ordinal alpha = mul(rho, omega_pow(beta.value));
            if (c.big_epsilon(alpha)) throw Error("Undetermined", "least component is an epsilon component");
            Ordinal k = c.kappa(alpha);
            img[m] = k;
            for (size_t i = 1; i < p.size(); ++i) img[p[i]] = add(k, sub[i]);
        }
        std::vector<Ordinal> out;
        for (int i : ids) out.push_back(img.at(i));
        return out;
    }
};

std::vector<Ordinal> claim2(const Calculus& c, const Nat& n, const Ordinal& xi) {
    std::vector<Ordinal> out;
    for (Nat i = 0; i <= n; ++i) out.push_back(mul_nat(c.rho(), i));
    if (!xi.is_zero()) out.push_back(add(mul_nat(c.rho(), n), xi));
    return out;
}

std::vector<Ordinal> component_set(const Calculus& c, const Ordinal& delta) {
    Ordinal alpha = mul(c.rho(), delta);
    if (c.big_epsilon(alpha)) throw Error("Undetermined", "component " + format(alpha) + " is an epsilon component");
    Ordinal beta = degree(delta);
    Ordinal k = c.kappa(alpha);
    Ordinal top = c.max1_kappa(beta).get();
    std::vector<Ordinal> r{Ordinal()};
    IndexedSet ext = extend_incompressible(c, {top});
    for (const auto& x : ext.base.members()) r.push_back(x);
    std::vector<Ordinal> out;
    for (const auto& x : r) out.push_back(add(k, x));
    return out;
}

std::vector<Ordinal> claim3(const Calculus& c, const Ordinal& delta, const Ordinal& xi) {
    std::vector<Ordinal> out;
    std::optional<Ordinal> top;
    for (const auto& d : indecomposable_parts(delta)) {
        std::vector<Ordinal> part = d == Ordinal(1) ? std::vector<Ordinal>{Ordinal()} : component_set(c, d);
        Ordinal shift = top ? add(*top, c.rho()) : Ordinal();
        for (const auto& x : part) out.push_back(add(shift, x));
        top = out.back();
    }
    if (!xi.is_zero()) out.push_back(add(*top, xi));
    return out;
}

} // namespace

IndexedSet indexed(const Calculus& c, const ClosedSet& x) {
    IndexedSet r{x, {}};
    for (const auto& m : x.members()) r.indices.push_back(c.index_or_throw(m));
    return r;
}

CoveringMap incompressible_cover(const Calculus& c, const ClosedSet& x) {
    Cover cv{c, {}};
    std::vector<int> ids;
    for (const auto& m : x.members()) {
        ids.push_back((int)cv.nodes.size());
        cv.nodes.push_back(Node{m, false});
    }
    CoveringMap h{x, cv.run(ids), Level::EmbeddingOnly};
    Certification cert = certify_covering(h, oracle_of(c), c.rho());
    if (cert.verdict == Tri::Undetermined) throw Error("Undetermined", cert.reasons.front());
    if (cert.verdict == Tri::False) throw std::logic_error("constructed map is not a covering: " + cert.reasons.front());
    h.level = Level::Covering;
    return h;
}

std::vector<int> index_set_violations(const Calculus& c, const std::vector<Ordinal>& k) {
    std::set<Ordinal, OrdLess> ks(k.begin(), k.end());
    std::set<int> bad;
    const Ordinal& rho = c.rho();
    for (const auto& a : ks) {
        auto sp = rho_split(a, rho);
        if (!sp.rem.is_zero()) {
            if (!ks.count(sp.q)) bad.insert(2);
            continue;
        }
        Ordinal delta = rho_quotient(a, rho);
        if (delta.is_nat()) {
            for (Nat i = 0; i < delta.nat_value(); ++i)
                if (!ks.count(mul_nat(rho, i))) bad.insert(3);
            continue;
        }
        auto parts = indecomposable_parts(delta);
        Ordinal acc;
        for (size_t i = 0; i + 1 < parts.size(); ++i) {
            acc = add(acc, parts[i]);
            if (!ks.count(mul(rho, acc))) bad.insert(4);
        }
    }
    return {bad.begin(), bad.end()};
}

std::vector<Ordinal> close_index_set(const Calculus& c, std::vector<Ordinal> k) {
    const Ordinal& rho = c.rho();
    std::set<Ordinal, OrdLess> ks(k.begin(), k.end());
    std::vector<Ordinal> todo(ks.begin(), ks.end());
    while (!todo.empty()) {
        Ordinal a = todo.back();
        todo.pop_back();
        std::vector<Ordinal> need;
        auto sp = rho_split(a, rho);
        if (!sp.rem.is_zero()) {
            need.push_back(sp.q);
        } else {
            Ordinal delta = rho_quotient(a, rho);
            if (delta.is_nat()) {
                for (Nat i = 0; i < delta.nat_value(); ++i) need.push_back(mul_nat(rho, i));
            } else {
                auto parts = indecomposable_parts(delta);
                Ordinal acc;
                for (size_t i = 0; i + 1 < parts.size(); ++i) {
                    acc = add(acc, parts[i]);
                    need.push_back(mul(rho, acc));
                }
            }
        }
        for (auto& n : need)
            if (ks.insert(n).second) todo.push_back(n);
    }
    return {ks.begin(), ks.end()};
}

IndexedSet build_from_index_set(const Calculus& c, const std::vector<Ordinal>& k) {
    for (const auto& a : k) c.check(a);
    auto bad = index_set_violations(c, k);
    if (!bad.empty()) throw Error("ClauseViolation", "clause " + std::to_string(bad.front()) + " fails");
    std::vector<Ordinal> all;
    for (const auto& a : sort_unique(k)) {
        auto sp = rho_split(a, c.rho());
        Ordinal delta = rho_quotient(a, c.rho());
        auto part = delta.is_nat() ? claim2(c, delta.nat_value(), sp.rem) : claim3(c, delta, sp.rem);
        all.insert(all.end(), part.begin(), part.end());
        all.push_back(c.kappa(a));
    }
    IndexedSet r = indexed(c, ClosedSet(all, c.rho()));
    if (sort_unique(r.indices) != sort_unique(k)) throw std::logic_error("index set of the built set differs from K");
    return r;
}

IndexedSet extend_incompressible(const Calculus& c, const std::vector<Ordinal>& x) {
    ClosedSet cx = closure(x, c.rho());
    if (cx.empty()) return {};
    IndexedSet ix = indexed(c, cx);
    IndexedSet built = build_from_index_set(c, close_index_set(c, ix.indices));
    std::vector<Ordinal> all = cx.members();
    all.insert(all.end(), built.base.members().begin(), built.base.members().end());
    return indexed(c, ClosedSet(all, c.rho()));
}

const char* verify_name(VerifyResult::Kind k) {
    switch (k) {
    case VerifyResult::Confirmed: return "Confirmed";
    case VerifyResult::Counterexample: return "CounterexampleMap";
    default: return "Inconclusive";
    }
}

VerifyResult verify_incompressible(const Calculus& c, const ClosedSet& x, const Budget& budget) {
    VerifyResult res;
    const auto& X = x.members();
    size_t n = X.size();
    if (n == 0) {
        res.kind = VerifyResult::Confirmed;
        return res;
    }
    Universe u = enumerate_universe(add(x.max(), 1), budget, c.config().eps_depth);
    std::vector<Ordinal> low(n), rems(n);
    std::vector<int> base(n, -1);
    for (size_t i = 0; i < n; ++i) {
        Ext a = c.index(X[i]);
        if (!a.known()) {
            res.note = "index of " + format(X[i]) + " undetermined";
            return res;
        }
        low[i] = c.kappa(a.value);
        auto sp = rho_split(X[i], c.rho());
        rems[i] = sp.rem;
        if (!sp.rem.is_zero()) base[i] = int(std::find(X.begin(), X.end(), sp.q) - X.begin());
    }
    std::vector<Ordinal> suffix_max(n + 1);
    for (size_t i = n; i-- > 0;) suffix_max[i] = i + 1 < n && compare(suffix_max[i + 1], low[i]) > 0 ? suffix_max[i + 1] : low[i];
    std::vector<std::vector<Tri>> s1(n, std::vector<Tri>(n)), s2 = s1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            s1[i][j] = c.le1(X[i], X[j]).value;
            s2[i][j] = le2(c, X[i], X[j]).value;
        }
    std::vector<Ordinal> img(n);
    bool unknown = false, found = false, out_of_budget = false;
    std::function<void(size_t, bool)> go = [&](size_t i, bool lowered) {
        if (found || out_of_budget) return;
        if (i == n) {
            if (lowered) found = true;
            return;
        }
        auto place = [&](const Ordinal& v) {
            if (++res.nodes > budget.max_nodes) {
                out_of_budget = true;
                return;
            }
            bool soft = false;
            for (size_t j = 0; j < i; ++j)
                for (int k = 1; k <= 2; ++k) {
                    Tri s = k == 1 ? s1[j][i] : s2[j][i];
                    if (s == Tri::False) continue;
                    Tri d = k == 1 ? c.le1(img[j], v).value : le2(c, img[j], v).value;
                    if (d == Tri::True) continue;
                    if (s == Tri::True && d == Tri::False) return;
                    soft = true;
                }
            if (soft) {
                unknown = true;
                return;
            }
            img[i] = v;
            go(i + 1, lowered || compare(v, low[i]) < 0);
        };
        if (base[i] >= 0) {
            Ordinal v = add(img[base[i]], rems[i]);
            if (i == 0 || compare(v, img[i - 1]) > 0) place(v);
            return;
        }
        auto it = i == 0 ? u.items.begin() : std::upper_bound(u.items.begin(), u.items.end(), img[i - 1], OrdLess{});
        for (; it != u.items.end() && !found && !out_of_budget; ++it) {
            if (!lowered && compare(*it, suffix_max[i]) >= 0) break;
            if (rho_split(*it, c.rho()).rem != rems[i]) continue;
            place(*it);
        }
    };
    go(0, false);
    if (found) {
        res.kind = VerifyResult::Counterexample;
        res.witness = CoveringMap{x, img, Level::Covering};
        return res;
    }
    if (unknown || out_of_budget || u.truncated) {
        res.note = unknown ? "a candidate needed an undetermined verdict" : "search budget exhausted";
        return res;
    }
    res.kind = VerifyResult::Confirmed;
    return res;
}

} // namespace resemblance
