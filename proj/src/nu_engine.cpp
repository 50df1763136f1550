#include "resemblance/nu_engine.hpp"

namespace resemblance {

namespace {

void need_epsilon(const Calculus& c, const Ordinal& alpha) {
    c.check(alpha);
    if (!c.big_epsilon(alpha)) throw Error("NotEpsilon", format(alpha) + " is not an epsilon number above rho");
}

bool multiple_of(const Ordinal& b, const Ordinal& k) { return rho_split(b, k).rem.is_zero(); }

Verdict le2_rec(const Calculus& c, const Ordinal& b1, const Ordinal& b2);

Verdict le2_nontrivial_component(const Calculus& c, const Ordinal& k, const Ordinal& b1, const Ordinal& b2) {
    if (b1 == k) return {Tri::False, {"lgsB.11"}};
    if (!limit_multiple(b1, c.rho())) return {Tri::False, {"lblD1"}};
    Verdict v = le2_rec(c, sub_left(k, b1), sub_left(k, b2));
    Trace t{c.rho() == Ordinal(1) ? "lmslA" : "MSL"};
    append(t, v.trace);
    return {v.value, t};
}

Verdict le2_rec(const Calculus& c, const Ordinal& b1, const Ordinal& b2) {
    int cmp = compare(b1, b2);
    if (cmp == 0) return {Tri::True, {"lblB.4"}};
    if (cmp > 0) return {Tri::False, {"lblB.1"}};
    if (!limit_multiple(b1, c.rho())) return {Tri::False, {"lblD1"}};
    Ext a1 = c.index(b1), a2 = c.index(b2);
    if (a1.known() && c.big_epsilon(a1.value)) {
        const Ordinal& k = a1.value;
        if (multiple_of(b1, k) && !multiple_of(b2, k)) return {Tri::False, {"lgsJ.9"}};
    }
    if (a1.known() && a2.known() && a1.value != a2.value) return {Tri::False, {"lgsB.5"}};
    if (a1.known() && !c.big_epsilon(a1.value)) return le2_nontrivial_component(c, c.kappa(a1.value), b1, b2);
    if (a1.known()) {
        const Ordinal& k = a1.value;
        auto sp2 = rho_split(b2, k);
        if (multiple_of(b1, k)) {
            auto p1 = nu_position(c, k, b1);
            auto p2 = nu_position(c, k, b2);
            if (p2) return {Tri::False, {"lgsJ.4"}};
            if (p1 && p1->is_nat()) return {Tri::False, {"lgsJ.5"}};
        } else if (compare(b1, sp2.q) > 0) {
            auto sp1 = rho_split(b1, k);
            Verdict v = le2_rec(c, sp1.rem, sp2.rem);
            Trace t{"RTSI"};
            append(t, v.trace);
            return {v.value, t};
        } else {
            return {Tri::False, {"RTSI"}};
        }
    }
    Verdict v1 = c.le1(b1, b2);
    if (v1.value == Tri::False) {
        Trace t{"lblB.2"};
        append(t, v1.trace);
        return {Tri::False, t};
    }
    return {Tri::Undetermined, {}};
}

} // namespace

std::optional<Ordinal> nu_position(const Calculus& c, const Ordinal& alpha, const Ordinal& b) {
    if (!c.big_epsilon(alpha) || b.is_zero() || !multiple_of(b, alpha)) return std::nullopt;
    Ordinal q = rho_quotient(b, alpha);
    if (q.is_nat()) return Ordinal::nat(q.nat_value() - 1);
    if (q == Ordinal::omega()) return q;
    return std::nullopt;
}

Ext nu(const Calculus& c, const Ordinal& alpha, const Ordinal& xi) {
    need_epsilon(c, alpha);
    c.check(xi);
    ComponentInfo ci = c.component(alpha);
    if (!ci.kappa.known()) return Ext::undetermined();
    const Ordinal& k = ci.kappa.value;
    if (xi.is_nat()) return Ext::of(mul_nat(k, xi.nat_value() + 1));
    if (xi == Ordinal::omega()) return Ext::of(mul(k, Ordinal::omega()));
    return Ext::undetermined();
}

Ext max2(const Calculus& c, const Ordinal& b, Trace* trace) {
    c.check(b);
    Trace local;
    Trace& tr = trace ? *trace : local;
    Ext a = c.index(b);
    if (!a.known()) return Ext::undetermined();
    if (!c.big_epsilon(a.value)) {
        tr.push_back("lgsB.11");
        return Ext::of(b);
    }
    const Ordinal& k = a.value;
    if (!multiple_of(b, k)) {
        tr.push_back("RTSI");
        return Ext::of(b);
    }
    auto p = nu_position(c, k, b);
    if (p && p->is_nat()) {
        tr.push_back("lgsJ.11");
        return Ext::of(b);
    }
    return Ext::undetermined();
}

NuInfo nu_info(const Calculus& c, const Ordinal& alpha, const Ordinal& xi) {
    NuInfo r{alpha, xi, nu(c, alpha, xi), Ext::undetermined(), Ext::undetermined()};
    if (r.nu.known()) r.max2 = max2(c, r.nu.value);
    r.j_upper = j_interval(c, alpha, xi).upper;
    return r;
}

Verdict le2(const Calculus& c, const Ordinal& b1, const Ordinal& b2) {
    c.check(b1);
    c.check(b2);
    return le2_rec(c, b1, b2);
}

Ordinal rtsi_translate(const Calculus& c, const Ordinal& alpha, const Ordinal& delta, const Ordinal& x) {
    need_epsilon(c, alpha);
    c.check(delta);
    c.check(x);
    Ordinal k = c.kappa(alpha);
    if (!multiple_of(delta, k)) throw Error("DeltaNotDivisible", format(delta) + " is not a multiple of " + format(k));
    if (x.is_zero() || compare(x, k) > 0) throw Error("XOutOfRange", format(x) + " not in [1, " + format(k) + "]");
    return add(delta, x);
}

JInterval j_interval(const Calculus& c, const Ordinal& alpha, const Ordinal& xi) {
    Ext lo = nu(c, alpha, xi);
    if (!lo.known()) throw Error("Undetermined", "nu_" + format(xi) + " is not determined");
    Ext up = xi.is_nat() ? nu(c, alpha, add(xi, 1)) : Ext::undetermined();
    return {lo.value, up, up};
}

std::string theta2_shape(const Calculus& c, const Ordinal& alpha) {
    need_epsilon(c, alpha);
    Ordinal k = c.kappa(alpha);
    return "theta2(" + format(alpha) + ") is either unbounded or theta+1 with theta an infinite additively "
           "indecomposable ordinal; nu_1 = " + format(k) + "+" + format(k) + " = " + format(mul_nat(k, 2)) +
           " since max2(nu_0) = nu_0";
}

} // namespace resemblance
