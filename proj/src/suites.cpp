#include "resemblance/suites.hpp"

#include "resemblance/sampling.hpp"

#include <functional>
#include <set>

namespace resemblance {

namespace {

struct Check {
    SuiteReport& r;
    void operator()(bool ok, const std::string& what) {
        ++r.checks;
        if (!ok && r.failures.size() < 50) r.failures.push_back(what);
    }
};

Ordinal random_term(Rng& rng, int depth, int eps_depth) {
    int n = uniform(rng, 0, 3);
    Ordinal out;
    std::vector<Ordinal> parts;
    for (int i = 0; i < n; ++i) {
        int kind = uniform(rng, 0, 9);
        Ordinal p;
        if (kind == 0 && eps_depth > 0) p = Ordinal::epsilon(uniform(rng, 0, eps_depth - 1));
        else if (kind < 4 || depth == 0) p = Ordinal(uniform(rng, 1, 9));
        else p = omega_pow(random_term(rng, depth - 1, eps_depth));
        parts.push_back(mul_nat(p, uniform(rng, 1, 3)));
    }
    std::sort(parts.begin(), parts.end(), [](auto& a, auto& b) { return compare(a, b) > 0; });
    for (auto& p : parts) out = add(out, p);
    return out;
}

std::string fmt2(const Ordinal& a, const Ordinal& b) { return format(a) + ", " + format(b); }

void ordinal_suite(SuiteReport& r, const Config& cfg, Rng& rng) {
    Check ok{r};
    int K = cfg.eps_depth;
    for (int i = 0; i < 400; ++i) {
        Ordinal a = random_term(rng, 2, K), b = random_term(rng, 2, K), c = random_term(rng, 2, K);
        ok(add(add(a, b), c) == add(a, add(b, c)), "associativity " + fmt2(a, b));
        ok(add(a, 0) == a && add(Ordinal(), a) == a, "identity " + format(a));
        ok(b.is_zero() || compare(add(a, b), a) > 0, "monotone sum " + fmt2(a, b));
        ok(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "left distributivity " + fmt2(a, b));
        for (const Ordinal& rho : {cfg.rho, Ordinal::omega(), omega_pow(Ordinal(2))}) {
            auto sp = rho_split(a, rho);
            ok(add(sp.q, sp.rem) == a && compare(sp.rem, rho) < 0 && mul(rho, rho_quotient(a, rho)) == sp.q,
               "rho_split " + fmt2(a, rho));
        }
        int cab = compare(a, b);
        ok(compare(omega_pow(a), omega_pow(b)) == cab, "omega_pow monotone " + fmt2(a, b));
        ok((omega_pow(a) == a) == epsilon_index(a).has_value(), "fixed points " + format(a));
    }
    for (int i = 0; i < 10000; ++i) {
        Ordinal a = random_term(rng, 3, K);
        ok(parse(format(a), std::max(K, 1)) == a && format(parse(format(a), std::max(K, 1))) == format(a),
           "round trip " + format(a));
    }
}

void rho_suite(SuiteReport& r, const Config& cfg, Rng& rng) {
    Check ok{r};
    for (const Ordinal& rho : {cfg.rho, Ordinal::omega()}) {
        for (int i = 0; i < 150; ++i) {
            std::vector<Ordinal> s, t;
            for (int j = uniform(rng, 0, 4); j > 0; --j) s.push_back(random_below_omega_omega(rng, 3, 3, 3));
            t = s;
            for (int j = uniform(rng, 0, 3); j > 0; --j) t.push_back(random_below_omega_omega(rng, 3, 3, 3));
            ClosedSet cs = closure(s, rho), ct = closure(t, rho);
            ok(closure(cs.members(), rho).members() == cs.members(), "closure idempotent");
            ok(std::includes(ct.members().begin(), ct.members().end(), cs.members().begin(), cs.members().end(), OrdLess{}),
               "closure monotone");
            std::vector<Ordinal> u = cs.members();
            u.insert(u.end(), ct.members().begin(), ct.members().end());
            ok(is_closed(sort_unique(u), rho), "union closed");
            for (size_t k = 0; k <= ct.size(); ++k)
                ok(is_closed(std::vector<Ordinal>(ct.members().begin(), ct.members().begin() + k), rho), "prefix closed");
            // random embedding by shifting divisible members, plus random corruption
            std::vector<Ordinal> img;
            Ordinal shift = mul(rho, Ordinal(uniform(rng, 0, 3)));
            Ordinal lead = mul(rho, omega_pow(Ordinal(uniform(rng, 3, 5))));
            for (const auto& m : ct.members()) img.push_back(add(add(lead, shift), m));
            if (uniform(rng, 0, 2) == 0 && !img.empty())
                img[uniform(rng, 0, (int)img.size() - 1)] = random_below_omega_omega(rng, 3, 6, 3);
            auto e = check_embedding(ct.members(), img, rho);
            ok(e.map.has_value() == check_embedding_pointwise(ct.members(), img, rho),
               "embedding characterizations agree");
            if (e.map) {
                ok(least_moved_check(*e.map, rho).empty(), "least moved point divisible");
                std::vector<Ordinal> img2;
                for (const auto& x : img) img2.push_back(add(lead, x));
                auto e2 = check_embedding(sort_unique(img), img2, rho);
                if (e2.map) {
                    CoveringMap comp = compose(*e2.map, *e.map, rho);
                    ok(check_embedding(ct.members(), comp.image, rho).map.has_value(), "composition accepted");
                }
            }
        }
    }
}

void relation_suite(SuiteReport& r, const Calculus& c, Rng& rng) {
    Check ok{r};
    std::vector<Ordinal> sample;
    for (int i = 0; i < 120; ++i) sample.push_back(random_below_omega_omega(rng, 4, 5, 4));
    sample = sort_unique(sample);
    for (size_t i = 0; i + 1 < sample.size(); ++i)
        ok(compare(c.kappa(sample[i]), c.kappa(sample[i + 1])) < 0, "kappa increasing at " + format(sample[i]));
    int limits = 0;
    for (const auto& l : sample) {
        if (!is_limit(l) || limits >= 60) continue;
        ++limits;
        std::vector<Ordinal> seq;
        for (unsigned n = 1; n <= 6; ++n) seq.push_back(c.kappa(fundamental(l, n)));
        ok(sup_of_tail(seq) == c.kappa(l), "continuity at " + format(l));
    }
    for (int i = 0; i < 150; ++i) {
        Ordinal a = random_below_omega_omega(rng, 3, 5, 3), b = random_below_omega_omega(rng, 3, 5, 3);
        ok(c.kappa(add(a, b)) == add(c.max1_kappa(a).get(), c.kappa(b)), "kappa additivity " + fmt2(a, b));
        ok(c.max1_kappa(add(a, b)).get() == add(c.max1_kappa(a).get(), c.max1_kappa(b).get()), "max1 additivity " + fmt2(a, b));
    }
    for (const auto& b : sample) {
        Ordinal t = mul(c.rho(), omega_pow(b));
        ok(c.max1_kappa(t).get() == add(c.kappa(t), c.max1_kappa(b).get()), "SRT at " + format(b));
        Ordinal k = c.kappa(b);
        ok(divisible(b, c.rho()) == divisible(k, c.rho()), "divisibility transfer " + format(b));
        ok(is_indecomposable(b) == is_indecomposable(k), "indecomposability transfer " + format(b));
        ok(c.index_or_throw(k) == b && c.index_or_throw(c.max1_kappa(b).get()) == b, "index inverts kappa " + format(b));
    }
    for (int i = 0; i < 40; ++i) {
        std::vector<Ordinal> pts;
        Ordinal a = random_below_omega_omega(rng, 2, 4, 2);
        Ordinal k = c.kappa(a);
        pts.push_back(k);
        for (int j = 0; j < 8; ++j) pts.push_back(add(k, random_below_omega_omega(rng, 2, 3, 3)));
        pts = sort_unique(pts);
        for (size_t x = 0; x < pts.size(); ++x) {
            bool closed = false;
            for (size_t y = x; y < pts.size(); ++y) {
                Tri t = c.le1(pts[x], pts[y]).value;
                ok(t != Tri::Undetermined, "le1 determined below the first epsilon");
                if (t == Tri::False) closed = true;
                ok(!(closed && t == Tri::True), "le1 interval shape at " + fmt2(pts[x], pts[y]));
                for (size_t z = y; z < pts.size(); ++z)
                    if (t == Tri::True && c.le1(pts[y], pts[z]).value == Tri::True)
                        ok(c.le1(pts[x], pts[z]).value == Tri::True, "le1 transitive");
            }
        }
    }
    for (int i = 0; i < 30; ++i) {
        Ordinal a = random_below_omega_omega(rng, 2, 4, 2), b = random_below_omega_omega(rng, 2, 4, 2);
        if (b.is_zero()) continue;
        Ordinal kb = c.kappa(b), mb = c.max1_kappa(b).get();
        std::vector<Ordinal> pts{kb, mb};
        Ordinal span = sub_left(kb, mb);
        for (int j = 0; j < 6; ++j) {
            Ordinal y = random_below(rng, add(span, 1), 3, 3);
            pts.push_back(add(kb, y));
        }
        pts = sort_unique(pts);
        for (const auto& x : pts)
            for (const auto& y : pts)
                ok(c.le1(x, y).value == c.le1(c.frt_iso(a, b, x), c.frt_iso(a, b, y)).value,
                   "frt preserves le1 " + fmt2(a, b));
        ok(c.frt_iso(a, b, kb) == c.kappa(add(a, b)) && c.frt_iso(a, b, mb) == c.max1_kappa(add(a, b)).get(),
           "frt endpoints " + fmt2(a, b));
    }
}

void nu_suite(SuiteReport& r, const Calculus& c, Rng& rng) {
    Check ok{r};
    auto e = c.first_epsilon();
    if (!e) {
        r.notes.push_back("no epsilon number above rho within the configured depth; suite skipped");
        return;
    }
    const Ordinal& alpha = *e;
    Ordinal k = c.kappa(alpha);
    ok(nu(c, alpha, 0).get() == k && max2(c, k).get() == k, "nu_0");
    for (int n = 0; n < 12; ++n) {
        Ordinal v = nu(c, alpha, n).get(), w = nu(c, alpha, n + 1).get();
        ok(compare(v, w) < 0 && rho_split(v, k).rem.is_zero(), "nu increasing and divisible");
        ok(w == add(max2(c, v).get(), k), "nu successor step");
        for (int m = 0; m < 8; ++m) {
            ok(nu(c, alpha, n + 1 + m).get() == add(max2(c, v).get(), nu(c, alpha, m).get()), "nu additivity");
            ok(max2(c, nu(c, alpha, n + 1 + m).get()).get() == add(max2(c, v).get(), max2(c, nu(c, alpha, m).get()).get()),
               "max2 additivity");
        }
        Max1Info a = c.max1_info(v), b = c.max1_info(k);
        ok(a.lo == b.lo && a.hi == b.hi, "max1 of nu equals max1 of kappa");
    }
    std::vector<Ordinal> pts;
    for (int n = 1; n <= 4; ++n)
        for (int j = 0; j < 4; ++j) {
            Ordinal d = mul_nat(k, n);
            pts.push_back(d);
            pts.push_back(add(d, random_below_omega_omega(rng, 3, 4, 3)));
        }
    pts.push_back(mul(k, Ordinal::omega()));
    pts = sort_unique(pts);
    for (const auto& x : pts)
        for (const auto& y : pts) {
            Verdict v2 = le2(c, x, y);
            if (v2.value == Tri::True) ok(c.le1(x, y).value == Tri::True, "le2 respects le1 " + fmt2(x, y));
            auto p = nu_position(c, alpha, y);
            if (p && compare(x, y) < 0) ok(v2.value == Tri::False, "nu minimal " + fmt2(x, y));
        }
    for (int n = 1; n <= 4; ++n) {
        Ordinal d = mul_nat(k, n);
        for (int j = 0; j < 6; ++j) {
            Ordinal x = add(d, random_below_omega_omega(rng, 3, 4, 3));
            for (const auto& y : pts)
                if (compare(y, d) <= 0) ok(le2(c, y, x).value == Tri::False, "RTSI gap " + fmt2(y, x));
        }
    }
    for (int xi = 0; xi < 4; ++xi)
        for (int eta = 0; eta < 4; ++eta) {
            Ordinal shift = max2(c, nu(c, alpha, xi).get()).get();
            std::vector<Ordinal> box{nu(c, alpha, eta).get(), nu(c, alpha, eta + 1).get()};
            for (int j = 0; j < 4; ++j) box.push_back(add(box[0], random_below_omega_omega(rng, 2, 3, 3)));
            box = sort_unique(box);
            for (const auto& x : box)
                for (const auto& y : box) {
                    Ordinal sx = add(shift, x), sy = add(shift, y);
                    ok(c.le1(x, y).value == c.le1(sx, sy).value && le2(c, x, y).value == le2(c, sx, sy).value,
                       "J shift preserves verdicts " + fmt2(x, y));
                }
        }
}

void incompressible_suite(SuiteReport& r, const Calculus& c, Rng& rng, const Budget& budget) {
    Check ok{r};
    for (int n = 0; n <= 5; ++n) {
        std::vector<Ordinal> s;
        for (int i = 0; i <= n; ++i) s.push_back(mul_nat(c.rho(), i));
        ok(verify_incompressible(c, ClosedSet(s, c.rho()), budget).kind == VerifyResult::Confirmed, "initial segment");
    }
    std::vector<ClosedSet> confirmed;
    for (int i = 0; i < 30; ++i) {
        ClosedSet x = i % 2 ? random_closed_set(rng, c.rho(), 4, 3) : random_linked_set(rng, c, 1, 2, 3);
        CoveringMap h = incompressible_cover(c, x);
        CoveringMap h2 = incompressible_cover(c, ClosedSet(x.members(), c.rho()));
        for (size_t j = 0; j < h.image.size(); ++j)
            ok(c.index(h.image[j]).get() == c.index(h2.image[j]).get(), "index agreement");
        ClosedSet img(h.image, c.rho());
        VerifyResult v = verify_incompressible(c, img, budget);
        ok(v.kind != VerifyResult::Counterexample, "cover is incompressible " + format(x.max()));
        if (v.kind == VerifyResult::Confirmed) {
            confirmed.push_back(img);
            for (const auto& m : img.members()) {
                Ordinal a = c.index(m).get();
                ok(std::binary_search(img.members().begin(), img.members().end(), c.max1_kappa(a).get(), OrdLess{}),
                   "component maximum present");
            }
        }
        IndexedSet ix = indexed(c, img);
        IndexedSet b = build_from_index_set(c, close_index_set(c, ix.indices));
        ok(sort_unique(b.indices) == close_index_set(c, ix.indices), "built index set");
    }
    for (size_t i = 0; i + 1 < confirmed.size() && i < 8; i += 2) {
        std::vector<Ordinal> u = confirmed[i].members();
        u.insert(u.end(), confirmed[i + 1].members().begin(), confirmed[i + 1].members().end());
        ok(verify_incompressible(c, ClosedSet(u, c.rho()), budget).kind != VerifyResult::Counterexample, "union");
    }
}

void oracle_suite(SuiteReport& r, const Calculus& c, Rng& rng, const Budget& budget) {
    Check ok{r};
    for (int i = 0; i < 200; ++i) {
        ClosedSet x = i % 2 ? random_closed_set(rng, c.rho(), 5, 4) : random_linked_set(rng, c, 2, 3, 4);
        auto v = check_axioms(extract_pattern(c, x));
        ok(v.empty(), "axioms " + (v.empty() ? std::string() : v.front()));
    }
    auto oracle = oracle_of(c);
    Budget small = budget;
    small.coeff = std::max(small.coeff, 9);
    for (const auto& y : {std::vector<Ordinal>{Ordinal::omega(), add(Ordinal::omega(), 1)}, std::vector<Ordinal>{Ordinal::omega()}}) {
        ClosedSet cy = closure(y, c.rho());
        SearchResult s = covering_search(c, cy, mul_nat(Ordinal::omega(), 10), small);
        for (const auto& h : s.coverings) ok(certify_covering(h, oracle, c.rho()).verdict == Tri::True, "search certified");
    }
    std::set<std::string> classes;
    for (int i = 0; i < 150; ++i) {
        ClosedSet x = i % 2 ? random_closed_set(rng, c.rho(), 3, 3) : random_linked_set(rng, c, 1, 2, 3);
        FinitePattern p = extract_pattern(c, x);
        std::string key;
        for (size_t a = 0; a < p.n; ++a) {
            key += format(p.rem_labels[a]) + "|";
            for (size_t b = 0; b < p.n; ++b) key += std::string(tri_name(p.le1[a][b])) + tri_name(p.le2[a][b]);
        }
        classes.insert(key);
    }
    ok(classes.size() < 200, "finitely many small patterns");
    r.notes.push_back(std::to_string(classes.size()) + " pattern classes among small sampled sets");
}

} // namespace

Ordinal fundamental(const Ordinal& lambda, unsigned n) {
    auto lt = cnf_last_term(lambda);
    Ordinal e = lt.last_exponent;
    if (is_successor(e)) return add(lt.prefix, mul_nat(omega_pow(cnf_last_term(e).prefix), n));
    return add(lt.prefix, omega_pow(fundamental(e, n)));
}

Ordinal sup_of_tail(const std::vector<Ordinal>& seq) {
    const Ordinal& x = seq[seq.size() - 2];
    const Ordinal& y = seq.back();
    const auto& tx = x.terms();
    const auto& ty = y.terms();
    std::vector<Term> prefix;
    size_t i = 0;
    while (i < tx.size() && i < ty.size() && compare(single(tx[i]), single(ty[i])) == 0) prefix.push_back(tx[i++]);
    Ordinal p = Ordinal::from_terms(prefix);
    Ordinal ex = i < tx.size() ? term_exponent(tx[i]) : Ordinal();
    Ordinal ey = term_exponent(ty[i]);
    if (i < tx.size() && ex == ey) return add(p, omega_pow(add(ey, 1)));
    std::vector<Ordinal> exps;
    for (const auto& s : seq)
        if (s.size() > i) exps.push_back(term_exponent(s.terms()[i]));
    return add(p, omega_pow(sup_of_tail(exps)));
}

std::vector<std::string> suite_names() { return {"ordinal", "rho", "relation", "nu", "incompressible", "oracle"}; }

SuiteReport run_suite(const std::string& name, const Config& cfg, std::uint64_t seed, const Budget& budget) {
    SuiteReport r;
    r.name = name;
    Rng rng(seed);
    Calculus c(cfg);
    if (name == "ordinal") ordinal_suite(r, cfg, rng);
    else if (name == "rho") rho_suite(r, cfg, rng);
    else if (name == "relation") relation_suite(r, c, rng);
    else if (name == "nu") nu_suite(r, c, rng);
    else if (name == "incompressible") incompressible_suite(r, c, rng, budget);
    else if (name == "oracle") oracle_suite(r, c, rng, budget);
    else throw Error("Usage", "unknown suite " + name);
    return r;
}

} // namespace resemblance
