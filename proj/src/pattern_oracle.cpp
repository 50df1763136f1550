#include "resemblance/pattern_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace resemblance {

namespace {

struct Enumerator {
    const Budget& b;
    int eps_depth;
    bool truncated = false;

    std::vector<Ordinal> exponents(const Ordinal& bound, int depth) {
        Ordinal d = degree(bound);
        std::vector<Ordinal> out;
        if (d.is_nat()) {
            for (Nat i = 0; i <= d.nat_value(); ++i) out.push_back(Ordinal::nat(i));
            return out;
        }
        if (depth > 0) out = run(add(d, 1), depth - 1);
        else out = {Ordinal()};
        for (int k = 0; k < eps_depth; ++k)
            if (compare(Ordinal::epsilon(k), d) <= 0) out.push_back(Ordinal::epsilon(k));
        return sort_unique(std::move(out));
    }

    std::vector<Ordinal> run(const Ordinal& bound, int depth) {
        std::vector<Ordinal> out;
        if (bound.is_zero()) return out;
        std::vector<Ordinal> ex = exponents(bound, depth);
        std::reverse(ex.begin(), ex.end());
        std::vector<Term> cur;
        std::function<void(size_t)> go = [&](size_t from) {
            if (out.size() >= b.max_universe) {
                truncated = true;
                return;
            }
            out.push_back(Ordinal::from_terms(cur));
            if ((int)cur.size() >= b.terms) return;
            for (size_t i = from; i < ex.size(); ++i) {
                for (int c = 1; c <= b.coeff; ++c) {
                    Ordinal e = ex[i];
                    Term t = e.is_zero() || !epsilon_index(e) ? Term{e, Nat(c), -1} : Term{Ordinal(), Nat(c), *epsilon_index(e)};
                    cur.push_back(t);
                    bool below = compare(Ordinal::from_terms(cur), bound) < 0;
                    if (below) go(i + 1);
                    cur.pop_back();
                    if (!below) break;
                }
            }
        };
        go(0);
        return sort_unique(std::move(out));
    }
};

} // namespace

Universe enumerate_universe(const Ordinal& bound, const Budget& budget, int eps_depth) {
    Enumerator e{budget, eps_depth};
    Universe u;
    u.items = e.run(bound, 3);
    u.truncated = e.truncated;
    return u;
}

RelationOracle oracle_of(const Calculus& c) {
    return [&c](int k, const Ordinal& x, const Ordinal& y) {
        return k == 1 ? c.le1(x, y).value : le2(c, x, y).value;
    };
}

FinitePattern extract_pattern(const Calculus& c, const ClosedSet& s) {
    FinitePattern p;
    p.n = s.size();
    p.values = s.members();
    for (const auto& v : p.values) {
        auto sp = rho_split(v, c.rho());
        p.rem_labels.push_back(sp.rem);
        p.divisible.push_back(sp.rem.is_zero());
    }
    p.le1.assign(p.n, std::vector<Tri>(p.n, Tri::False));
    p.le2 = p.le1;
    for (size_t i = 0; i < p.n; ++i)
        for (size_t j = 0; j < p.n; ++j) {
            p.le1[i][j] = c.le1(p.values[i], p.values[j]).value;
            p.le2[i][j] = le2(c, p.values[i], p.values[j]).value;
        }
    return p;
}

std::vector<std::string> check_axioms(const FinitePattern& p) {
    std::vector<std::string> v;
    auto T = [](Tri t) { return t == Tri::True; };
    auto F = [](Tri t) { return t == Tri::False; };
    auto at = [](size_t i, size_t j) { return " at (" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    const std::vector<std::vector<Tri>>* rel[2] = {&p.le1, &p.le2};
    const char* nm[2] = {"<=1", "<=2"};
    for (int k = 0; k < 2; ++k) {
        const auto& r = *rel[k];
        for (size_t i = 0; i < p.n; ++i) {
            if (!T(r[i][i])) v.push_back(std::string("reflexive(") + nm[k] + ")" + at(i, i));
            for (size_t j = 0; j < p.n; ++j) {
                if (i != j && T(r[i][j]) && T(r[j][i])) v.push_back(std::string("antisymmetric(") + nm[k] + ")" + at(i, j));
                if (k == 0 && T(r[i][j]) && j < i) v.push_back("respects(<=1,<=)" + at(i, j));
                for (size_t l = 0; l < p.n; ++l) {
                    if (T(r[i][j]) && T(r[j][l]) && F(r[i][l])) v.push_back(std::string("transitive(") + nm[k] + ")" + at(i, l));
                    if (k == 0 && i < j && j < l && T(r[i][l]) && F(r[i][j])) v.push_back("respects(<=1,<=)" + at(i, j));
                    if (k == 1 && T(p.le1[i][j]) && T(p.le1[j][l]) && T(r[i][l]) && F(r[i][j]))
                        v.push_back("respects(<=2,<=1)" + at(i, j));
                }
                if (k == 1 && T(r[i][j]) && F(p.le1[i][j])) v.push_back("respects(<=2,<=1)" + at(i, j));
            }
        }
        for (size_t z = 0; z < p.n; ++z)
            for (size_t x = 0; x < p.n; ++x)
                for (size_t y = x + 1; y < p.n; ++y)
                    if (T(r[x][z]) && T(r[y][z]) && F(r[x][y]) && F(r[y][x]))
                        v.push_back(std::string("forest(") + nm[k] + ")" + at(x, y));
    }
    return v;
}

const char* iso_name(Iso i) {
    switch (i) {
    case Iso::Isomorphic: return "Isomorphic";
    case Iso::Distinct: return "Distinct";
    default: return "Inconclusive";
    }
}

Iso iso_check(const Calculus& c, const std::vector<Ordinal>& a, const std::vector<Ordinal>& b) {
    if (a.size() != b.size()) throw Error("SizeMismatch", std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    auto sa = sort_unique(a), sb = sort_unique(b);
    if (sa.size() != sb.size()) throw Error("SizeMismatch", "duplicate members");
    bool unknown = false;
    for (size_t i = 0; i < sa.size(); ++i) {
        if (rho_split(sa[i], c.rho()).rem != rho_split(sb[i], c.rho()).rem) return Iso::Distinct;
    }
    for (size_t i = 0; i < sa.size(); ++i)
        for (size_t j = i + 1; j < sa.size(); ++j) {
            Tri x1 = c.le1(sa[i], sa[j]).value, y1 = c.le1(sb[i], sb[j]).value;
            Tri x2 = le2(c, sa[i], sa[j]).value, y2 = le2(c, sb[i], sb[j]).value;
            for (auto [x, y] : {std::pair{x1, y1}, std::pair{x2, y2}}) {
                if (x == Tri::Undetermined || y == Tri::Undetermined) unknown = true;
                else if (x != y) return Iso::Distinct;
            }
        }
    return unknown ? Iso::Inconclusive : Iso::Isomorphic;
}

SearchResult covering_search(const Calculus& c, const ClosedSet& y, const Ordinal& bound, const Budget& budget) {
    SearchResult res;
    Universe u = enumerate_universe(bound, budget, c.config().eps_depth);
    res.truncated = u.truncated;
    const auto& Y = y.members();
    size_t n = Y.size();
    if (n == 0) {
        res.coverings.push_back(CoveringMap{y, {}, Level::Covering});
        return res;
    }
    std::vector<Ordinal> rems;
    std::vector<int> base(n, -1);
    for (size_t i = 0; i < n; ++i) {
        auto sp = rho_split(Y[i], c.rho());
        rems.push_back(sp.rem);
        if (!sp.rem.is_zero()) base[i] = int(std::find(Y.begin(), Y.end(), sp.q) - Y.begin());
    }
    std::vector<std::vector<Tri>> src1(n, std::vector<Tri>(n)), src2 = src1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            src1[i][j] = c.le1(Y[i], Y[j]).value;
            src2[i][j] = le2(c, Y[i], Y[j]).value;
        }
    std::vector<Ordinal> img(n);
    size_t nodes = 0;
    bool flagged = false;
    std::function<void(size_t)> go = [&](size_t i) {
        if (res.coverings.size() >= budget.max_results || nodes > budget.max_nodes) {
            res.truncated = true;
            return;
        }
        if (i == n) {
            if (flagged) res.undetermined.push_back(img);
            else res.coverings.push_back(CoveringMap{y, img, Level::Covering});
            return;
        }
        auto place = [&](const Ordinal& v) {
            ++nodes;
            bool was = flagged;
            for (size_t j = 0; j < i; ++j)
                for (int k = 1; k <= 2; ++k) {
                    Tri s = k == 1 ? src1[j][i] : src2[j][i];
                    if (s == Tri::False) continue;
                    Tri d = k == 1 ? c.le1(img[j], v).value : le2(c, img[j], v).value;
                    if (d == Tri::True) continue;
                    if (s == Tri::True && d == Tri::False) {
                        flagged = was;
                        return;
                    }
                    flagged = true;
                }
            img[i] = v;
            go(i + 1);
            flagged = was;
        };
        if (base[i] >= 0) {
            Ordinal v = add(img[base[i]], rems[i]);
            if (compare(v, bound) < 0 && (i == 0 || compare(v, img[i - 1]) > 0)) place(v);
            return;
        }
        auto it = i == 0 ? u.items.begin()
                         : std::upper_bound(u.items.begin(), u.items.end(), img[i - 1], OrdLess{});
        for (; it != u.items.end(); ++it) {
            if (rho_split(*it, c.rho()).rem != rems[i]) continue;
            place(*it);
            if (res.truncated) return;
        }
    };
    go(0);
    return res;
}

std::string to_dot(const FinitePattern& p) {
    std::string s = "digraph pattern {\n  rankdir=LR;\n";
    for (size_t i = 0; i < p.n; ++i) {
        std::string label = i < p.values.size() ? format(p.values[i]) : std::to_string(i);
        s += "  n" + std::to_string(i) + " [label=\"" + label + "\\nrem=" + format(p.rem_labels[i]) + "\"];\n";
    }
    for (size_t i = 0; i < p.n; ++i)
        for (size_t j = 0; j < p.n; ++j) {
            if (i == j) continue;
            std::string e = "  n" + std::to_string(i) + " -> n" + std::to_string(j);
            if (p.le1[i][j] == Tri::True) s += e + " [style=solid];\n";
            else if (p.le1[i][j] == Tri::Undetermined && i < j) s += e + " [style=dotted];\n";
            if (p.le2[i][j] == Tri::True) s += e + " [color=\"black:black\"];\n";
            else if (p.le2[i][j] == Tri::Undetermined && i < j) s += e + " [style=dotted, color=\"black:black\"];\n";
        }
    return s + "}\n";
}

} // namespace resemblance
