#include "resemblance/sampling.hpp"

namespace resemblance {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Ordinal random_below_omega_omega(Rng& rng, int max_terms, int max_exp, int max_coeff) {
    int n = uniform(rng, 1, max_terms);
    std::vector<int> ex;
    for (int i = 0; i < n; ++i) ex.push_back(uniform(rng, 0, max_exp));
    std::sort(ex.rbegin(), ex.rend());
    ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
    Ordinal out;
    for (int e : ex) out = add(out, mul_nat(omega_pow(Ordinal(e)), uniform(rng, 1, max_coeff)));
    return out;
}

Ordinal random_below(Rng& rng, const Ordinal& bound, int max_terms, int max_coeff) {
    for (int tries = 0; tries < 64; ++tries) {
        Ordinal d = degree(bound);
        std::vector<Ordinal> ex{Ordinal()};
        if (d.is_nat()) {
            for (Nat i = 1; i <= d.nat_value(); ++i) ex.push_back(Ordinal::nat(i));
        } else {
            ex.push_back(1);
            ex.push_back(2);
            ex.push_back(d);
            if (!cnf_last_term(d).prefix.is_zero() || is_successor(d)) ex.push_back(cnf_last_term(d).prefix);
        }
        ex = sort_unique(ex);
        int n = uniform(rng, 1, max_terms);
        std::vector<Ordinal> pick;
        for (int i = 0; i < n; ++i) pick.push_back(ex[uniform(rng, 0, (int)ex.size() - 1)]);
        pick = sort_unique(pick);
        Ordinal out;
        for (auto it = pick.rbegin(); it != pick.rend(); ++it)
            out = add(out, mul_nat(omega_pow(*it), uniform(rng, 1, max_coeff)));
        if (compare(out, bound) < 0) return out;
    }
    return Ordinal();
}

ClosedSet random_closed_set(Rng& rng, const Ordinal& rho, int max_size, int max_exp) {
    int n = uniform(rng, 1, max_size);
    std::vector<Ordinal> s;
    for (int i = 0; i < n; ++i) s.push_back(random_below_omega_omega(rng, 3, max_exp, 3));
    return closure(s, rho);
}

ClosedSet random_linked_set(Rng& rng, const Calculus& c, int anchors, int per_anchor, int max_exp) {
    std::vector<Ordinal> s;
    for (int i = 0; i < anchors; ++i) {
        Ordinal a = random_below_omega_omega(rng, 2, max_exp, 2);
        Ordinal k = c.kappa(a);
        s.push_back(k);
        Ext m = c.max1_kappa(a);
        if (!m.known()) continue;
        Ordinal span = sub_left(k, m.value);
        for (int j = 0; j < per_anchor; ++j) {
            Ordinal y = uniform(rng, 0, 3) == 0 ? span : random_below(rng, add(span, 1), 3, 3);
            s.push_back(add(k, y));
        }
    }
    if (uniform(rng, 0, 1)) s.push_back(random_below_omega_omega(rng, 2, max_exp, 3));
    return closure(s, c.rho());
}

} // namespace resemblance
