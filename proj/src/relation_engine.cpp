#include "resemblance/relation_engine.hpp"

#include <mutex>

namespace resemblance {

void append(Trace& t, const Trace& more) {
    for (const auto& s : more)
        if (std::find(t.begin(), t.end(), s) == t.end()) t.push_back(s);
}

std::string join(const Trace& t) {
    std::string out;
    for (const auto& s : t) out += (out.empty() ? "" : "; ") + s;
    return out;
}

Calculus::Calculus(Config cfg) : cfg_(std::move(cfg)) {
    check_rho(cfg_.rho);
    if (cfg_.eps_depth < 0) throw Error("Config", "negative epsilon depth");
    check(cfg_.rho);
    c_ = rho_exponent(cfg_.rho);
    rho_omega_ = omega_pow(add(c_, 1));
    for (int k = 0; k < cfg_.eps_depth; ++k)
        if (compare(Ordinal::epsilon(k), cfg_.rho) > 0) {
            estar_ = k;
            break;
        }
    if (estar_) {
        int u = cfg_.sequel ? *estar_ + 1 : *estar_;
        if (u < cfg_.eps_depth) undecided_ = Ordinal::epsilon(u);
    }
}

void Calculus::check(const Ordinal& a) const {
    int k = max_epsilon(a);
    if (k >= cfg_.eps_depth)
        throw Error("BoundExceeded", format(a) + " uses e" + std::to_string(k) + " beyond the configured depth");
}

bool Calculus::big_epsilon(const Ordinal& a) const {
    return epsilon_index(a).has_value() && compare(a, cfg_.rho) > 0;
}

std::optional<Ordinal> Calculus::first_epsilon() const {
    if (!estar_) return std::nullopt;
    return Ordinal::epsilon(*estar_);
}

bool Calculus::link_free_upto(const Ordinal& x) const {
    auto e = first_epsilon();
    return !e || compare(x, mul(*e, add(Ordinal::omega(), 1))) < 0;
}

std::optional<Ordinal> Calculus::jump_exponent(const Ordinal& e) const {
    if (!cfg_.sequel || !estar_) return std::nullopt;
    Ordinal E = Ordinal::epsilon(*estar_);
    if (compare(e, E) <= 0) return std::nullopt;
    Ordinal r = sub_left(E, e);
    if (r.is_nat()) return add(e, 1);
    return std::nullopt;
}

Calculus::Comp Calculus::comp_indec(const Ordinal& t) const {
    Comp r;
    bool beyond = undecided_ && compare(t, *undecided_) > 0;
    if (auto k = epsilon_index(t)) {
        if (beyond) return {Ext::undetermined(), Ext::undetermined(), {}, {}};
        r.k = Ext::of(t);
        r.kt = {"lgsB.2"};
        if (cfg_.sequel && estar_ && *k == *estar_) {
            r.m = Ext::of(mul(t, add(Ordinal::omega(), 1)));
            r.mt = {"sequel"};
        } else {
            r.m = Ext::undetermined();
            r.mt = {"cgsG"};
        }
        return r;
    }
    if (beyond) return {Ext::undetermined(), Ext::undetermined(), {}, {}};
    Ordinal e = degree(t);
    Ordinal d = jump_exponent(e).value_or(e);
    r.k = Ext::of(omega_pow(d));
    r.kt = {"lgsB.2"};
    Comp sub = comp(sub_left(c_, e));
    r.mt = {"SRT"};
    append(r.mt, sub.mt);
    r.m = sub.m.known() ? Ext::of(add(r.k.value, sub.m.value)) : Ext::undetermined();
    return r;
}

Calculus::Comp Calculus::comp(const Ordinal& a) const {
    if (a.is_zero()) return {Ext::of({}), Ext::of({}), {"lgsB.1"}, {"lgsB.1"}};
    if (compare(a, rho_omega_) < 0) return {Ext::of(a), Ext::of(a), {"lgsB.8"}, {"lgsB.8"}};
    {
        std::shared_lock lock(mu_);
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;
    }
    Comp r;
    if (is_indecomposable(a)) {
        r = comp_indec(a);
    } else {
        const auto& ts = a.terms();
        Ordinal k, m;
        bool known = true;
        r.kt = {"lgsD"};
        r.mt = {"lgsD"};
        for (size_t i = 0; i < ts.size() && known; ++i) {
            Comp ct = comp(omega_pow(term_exponent(ts[i])));
            if (!ct.m.known() && !(i + 1 == ts.size() && ts[i].coeff == 1 && ct.k.known())) {
                known = false;
                break;
            }
            append(r.mt, ct.mt);
            if (i + 1 < ts.size()) {
                m = add(m, mul_nat(ct.m.value, ts[i].coeff));
                append(r.kt, ct.mt);
            } else {
                k = add(add(m, mul_nat(ct.m.known() ? ct.m.value : Ordinal(), ts[i].coeff - 1)), ct.k.value);
                append(r.kt, ct.kt);
                if (ct.m.known())
                    m = add(m, mul_nat(ct.m.value, ts[i].coeff));
                else
                    known = false, r.k = Ext::of(k);
            }
        }
        if (known) {
            r.k = Ext::of(k);
            r.m = Ext::of(m);
        } else {
            r.m = Ext::undetermined();
            if (!r.k.known()) r.k = Ext::undetermined();
        }
    }
    std::unique_lock lock(mu_);
    memo_.emplace(a, r);
    return r;
}

ComponentInfo Calculus::component(const Ordinal& a) const {
    check(a);
    Comp c = comp(a);
    return {a, c.k, c.m, c.kt, c.mt};
}

Ordinal Calculus::kappa(const Ordinal& a) const { return component(a).kappa.get(); }

Ext Calculus::max1_kappa(const Ordinal& a) const { return component(a).max1; }

Ordinal Calculus::max1_lower_bound(const Ordinal& a) const {
    if (!big_epsilon(a)) throw Error("NotEpsilon", format(a) + " is not an epsilon number above rho");
    return mul(kappa(a), Ordinal::omega());
}

Ext Calculus::index(const Ordinal& b, Trace* trace) const {
    check(b);
    Trace local;
    Trace& tr = trace ? *trace : local;
    if (compare(b, rho_omega_) < 0) {
        tr.push_back("lgsB.8");
        return Ext::of(b);
    }
    Ordinal acc, rest = b;
    for (;;) {
        if (compare(rest, rho_omega_) < 0) {
            append(tr, {"lgsB.8"});
            return Ext::of(add(acc, rest));
        }
        Ordinal d = degree(rest);
        if (undecided_ && compare(d, *undecided_) > 0) return Ext::undetermined();
        Ordinal e = jump_exponent(d) ? cnf_last_term(d).prefix : d;
        Ordinal t = omega_pow(e);
        Comp ct = comp(t);
        if (!ct.k.known()) return Ext::undetermined();
        if (!ct.m.known()) {
            if (compare(rest, mul(t, Ordinal::omega())) <= 0) {
                append(tr, {"cgsG"});
                return Ext::of(add(acc, t));
            }
            return Ext::undetermined();
        }
        const Ordinal& mt = ct.m.value;
        if (compare(rest, mt) <= 0) return Ext::of(add(acc, t));
        Nat q = 1;
        if (degree(mt) == d) {
            q = rest.terms()[0].coeff / mt.terms()[0].coeff;
            if (q == 0) q = 1;
            while (q > 1 && compare(mul_nat(mt, q), rest) >= 0) --q;
        }
        append(tr, {"lgsD"});
        acc = add(acc, mul_nat(t, q));
        rest = sub_left(mul_nat(mt, q), rest);
    }
}

Ordinal Calculus::index_or_throw(const Ordinal& b) const { return index(b).get(); }

Max1Info Calculus::max1_info(const Ordinal& b) const {
    check(b);
    if (b.is_zero()) return {b, b, {"lgsB.1"}};
    if (!limit_multiple(b, cfg_.rho)) return {b, b, {"lblD1"}};
    Ext a = index(b);
    if (!a.known()) return {b, std::nullopt, {}};
    Comp c = comp(a.value);
    const Ordinal& k = c.k.value;
    std::optional<Ordinal> m;
    if (c.m.known()) m = c.m.value;
    bool eps = big_epsilon(a.value);
    Ordinal lower_m = m ? *m : (eps ? mul(k, Ordinal::omega()) : k);
    if (b == k) return {lower_m, m, c.mt};
    if (m && b == *m) return {b, b, {"lgsB.5"}};
    if (eps) {
        auto sp = rho_split(b, k);
        if (!sp.rem.is_zero()) {
            Max1Info sub = max1_info(sp.rem);
            Max1Info r{add(sp.q, sub.lo), std::nullopt, {"RTSI"}};
            if (sub.hi) r.hi = add(sp.q, *sub.hi);
            append(r.trace, sub.trace);
            return r;
        }
        Ordinal q = rho_quotient(b, k);
        if (q.is_nat() || q == Ordinal::omega()) {
            Trace t{"lgsI"};
            append(t, c.mt);
            return {lower_m, m, t};
        }
        return {b, m, {}};
    }
    Max1Info sub = max1_info(sub_left(k, b));
    Max1Info r{add(k, sub.lo), std::nullopt, {cfg_.rho == Ordinal(1) ? "lmslA" : "MSL"}};
    if (sub.hi) r.hi = add(k, *sub.hi);
    if (m) {
        if (compare(r.lo, *m) > 0) r.lo = *m;
        if (!r.hi || compare(*r.hi, *m) > 0) r.hi = *m;
    }
    append(r.trace, sub.trace);
    return r;
}

Ext Calculus::max1(const Ordinal& b) const {
    Max1Info i = max1_info(b);
    return i.exact() ? Ext::of(i.lo) : Ext::undetermined();
}

Verdict Calculus::le1(const Ordinal& b1, const Ordinal& b2) const {
    check(b1);
    check(b2);
    int c = compare(b1, b2);
    if (c == 0) return {Tri::True, {"lblB.4"}};
    if (c > 0) return {Tri::False, {"lblB.1"}};
    Max1Info i = max1_info(b1);
    if (compare(b2, i.lo) <= 0) return {Tri::True, i.trace};
    if (i.hi && compare(b2, *i.hi) > 0) return {Tri::False, i.trace};
    return {Tri::Undetermined, i.trace};
}

Ordinal Calculus::frt_iso(const Ordinal& a, const Ordinal& b, const Ordinal& x) const {
    check(a);
    check(b);
    check(x);
    if (b.is_zero()) throw Error("XNotInComponent", "b must be positive");
    ComponentInfo cb = component(b);
    const Ordinal& kb = cb.kappa.get();
    bool above = cb.max1.known() ? compare(x, cb.max1.value) > 0
                                 : (big_epsilon(b) ? compare(x, max1_lower_bound(b)) > 0 : true);
    if (compare(x, kb) < 0 || above) throw Error("XNotInComponent", format(x) + " not in I_" + format(b));
    return add(max1_kappa(a).get(), x);
}

Ordinal Calculus::lmsl_translate(const Ordinal& base1, const Ordinal& base2, const Ordinal& gamma,
                                 const Ordinal& x) const {
    for (const auto* b : {&base1, &base2})
        if (!divisible(*b, cfg_.rho)) throw Error("NotApplicable", "base " + format(*b) + " is not divisible by rho");
    if (compare(x, base1) < 0 || compare(x, add(base1, gamma)) > 0)
        throw Error("NotApplicable", format(x) + " outside the translated interval");
    for (const auto* b : {&base1, &base2})
        if (!link_free_upto(add(*b, gamma)))
            throw Error("NotApplicable", "no <=2 link from [0," + format(*b) + "] into the range is not certified");
    Max1Info m1 = max1_info(base1), m2 = max1_info(base2);
    if (!m1.exact() || !m2.exact()) throw Error("NotApplicable", "max1 of a base is undetermined");
    Ordinal d1 = sub_left(base1, m1.lo), d2 = sub_left(base2, m2.lo);
    bool ok = (compare(gamma, d1) <= 0 && compare(gamma, d2) <= 0) || d1 == d2;
    if (!ok) throw Error("NotApplicable", "gamma exceeds delta1/delta2 and delta1 != delta2");
    return add(base2, sub_left(base1, x));
}

Ordinal Calculus::msl_translate(const Ordinal& base, const Ordinal& x) const {
    check(base);
    check(x);
    if (x.is_zero()) throw Error("NotApplicable", "x must be at least 1");
    Ordinal eta = sub_left(Ordinal(1), x);
    if (cfg_.rho == Ordinal(1)) return lmsl_translate(Ordinal(1), base, eta, x);
    if (divisible(base, cfg_.rho)) throw Error("NotApplicable", "base " + format(base) + " is divisible by rho");
    if (!link_free_upto(add(base, eta)))
        throw Error("NotApplicable", "no <=2 link from [0," + format(base) + ") into the range is not certified");
    return add(base, eta);
}

} // namespace resemblance
