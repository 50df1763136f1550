#include "resemblance/incompressible.hpp"
#include "resemblance/sampling.hpp"
#include "resemblance/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace resemblance;

namespace {

const Ordinal W = Ordinal::omega();
const Ordinal E0 = Ordinal::epsilon(0);
Ordinal P(const char* s) { return parse(s); }

struct Tally {
    size_t checks = 0;
    std::vector<std::string> bad;
    std::string detail;
    void operator()(bool ok, const std::string& what) {
        ++checks;
        if (!ok && bad.size() < 5) bad.push_back(what);
        else if (!ok) bad.push_back("");
    }
};

Ordinal exact(const Ext& e) { return e.get(); }

void exact_values(Tally& t, std::uint64_t) {
    Calculus c;
    for (unsigned n = 0; n <= 100; ++n) t(c.kappa(n) == Ordinal(n), "kappa_" + std::to_string(n));
    t(c.kappa(W) == W, "kappa_w");
    t(exact(c.max1(W)) == P("w+1"), "max1(w)");
    t(c.kappa(P("w+1")) == P("w+2"), "kappa_{w+1}");
    t(exact(c.max1_kappa(P("w*2"))) == P("w*2+1"), "max1(kappa_{w*2})");
    t(exact(c.max1_kappa(P("w^2"))) == P("w^2+2"), "max1(kappa_{w^2})");
    t(exact(c.max1_kappa(P("w^w"))) == P("w^w+w+1"), "max1(kappa_{w^w})");
}

void additivity(Tally& t, std::uint64_t seed) {
    Rng rng(seed);
    Calculus fwd, rev;
    for (int i = 0; i < 200; ++i) {
        Ordinal a = random_below_omega_omega(rng, 3, 5, 4), b = random_below_omega_omega(rng, 3, 5, 4);
        Ordinal ab = add(a, b);
        Ordinal direct = rev.kappa(ab), direct_m = exact(rev.max1_kappa(ab));
        Ordinal via = b.is_zero() ? fwd.kappa(a) : add(exact(fwd.max1_kappa(a)), fwd.kappa(b));
        Ordinal via_m = add(exact(fwd.max1_kappa(a)), exact(fwd.max1_kappa(b)));
        std::string tag = format(a) + " + " + format(b);
        t(direct == via, "kappa " + tag);
        t(direct_m == via_m, "max1 " + tag);
    }
}

void srt(Tally& t, std::uint64_t seed) {
    Rng rng(seed + 1);
    Calculus c;
    for (int i = 0; i < 50; ++i) {
        Ordinal b = random_below_omega_omega(rng, 3, 4, 4);
        Ordinal p = omega_pow(b);
        t(exact(c.max1_kappa(p)) == add(c.kappa(p), exact(c.max1_kappa(b))), "w^" + format(b));
        if (is_limit(p)) {
            std::vector<Ordinal> seq;
            for (unsigned n = 1; n <= 6; ++n) seq.push_back(c.kappa(fundamental(p, n)));
            t(sup_of_tail(seq) == c.kappa(p), "continuity at w^" + format(b));
        }
    }
}

void axioms(Tally& t, std::uint64_t seed) {
    Rng rng(seed + 2);
    size_t linked = 0;
    for (const Ordinal& rho : {Ordinal(1), W}) {
        Calculus c({rho});
        for (int i = 0; i < 500; ++i) {
            ClosedSet x = i % 2 ? random_closed_set(rng, rho, 5, 4) : random_linked_set(rng, c, 2, 3, 4);
            FinitePattern p = extract_pattern(c, x);
            auto v = check_axioms(p);
            t(v.empty(), v.empty() ? "" : v.front());
            bool any = false;
            for (size_t a = 0; a < p.n; ++a)
                for (size_t b = a + 1; b < p.n; ++b) any |= p.le1[a][b] == Tri::True;
            linked += any;
        }
    }
    t.detail = std::to_string(linked) + " of 1000 sets carry a <=1 link";
}

void first_recurrence(Tally& t, std::uint64_t seed) {
    Rng rng(seed + 3);
    Calculus c;
    const Ordinal tails[] = {7, 8, 9, W, P("w+1"), P("w*2")};
    for (int i = 0; i < 30; ++i) {
        Ordinal a = random_below_omega_omega(rng, 2, 4, 3);
        Ordinal b = mul_nat(omega_pow(tails[uniform(rng, 0, 5)]), uniform(rng, 1, 2));
        if (uniform(rng, 0, 1)) b = add(omega_pow(add(tails[5], 1)), b);
        Ordinal k = c.kappa(b), span = sub_left(k, exact(c.max1_kappa(b)));
        std::vector<Ordinal> xs{k, add(k, span)};
        for (int guard = 0; xs.size() < 8 && guard < 1000; ++guard) {
            xs.push_back(add(k, random_below(rng, add(span, 1), 3, 12)));
            xs = sort_unique(xs);
        }
        std::vector<Ordinal> img;
        for (const auto& x : xs) img.push_back(c.frt_iso(a, b, x));
        std::string tag = "a=" + format(a) + " b=" + format(b);
        t(xs.size() == 8, "eight points " + tag);
        t(iso_check(c, xs, img) == Iso::Isomorphic, tag);
    }
}

void small_intervals(Tally& t, std::uint64_t seed) {
    Rng rng(seed + 4);
    Calculus c;
    Ordinal top = P("w^2");
    for (unsigned k : {2u, 3u, 5u}) {
        Ordinal d = mul_nat(E0, k);
        for (int i = 0; i < 20; ++i) {
            std::vector<Ordinal> xs;
            int n = uniform(rng, 2, 6);
            for (int j = 0; j < n; ++j) xs.push_back(add(random_below(rng, top, 3, 4), 1));
            if (uniform(rng, 0, 2) == 0) xs.push_back(top);
            xs = sort_unique(xs);
            std::vector<Ordinal> img;
            for (const auto& x : xs) img.push_back(rtsi_translate(c, E0, d, x));
            std::string tag = "delta=" + format(d);
            t(iso_check(c, xs, img) == Iso::Isomorphic, tag);
            std::vector<Ordinal> ys{d, E0, Ordinal()};
            for (int j = 0; j < 4; ++j) ys.push_back(random_below(rng, d, 3, 4));
            for (const auto& y : ys)
                for (const auto& x : img) t(le2(c, y, x).value == Tri::False, format(y) + " <=2 " + format(x));
        }
    }
}

void nu_chain(Tally& t, std::uint64_t) {
    Calculus c;
    for (unsigned n = 0; n <= 30; ++n) t(nu(c, E0, n).get() == mul_nat(E0, n + 1), "nu_" + std::to_string(n));
    t(nu(c, E0, W).get() == P("w^(e0+1)"), "nu_w");
    t(max2(c, P("w^(e0+1)")).kind == Ext::Undetermined, "max2 at nu_w");
}

void epsilon_gap(Tally& t, std::uint64_t seed) {
    Rng rng(seed + 5);
    Calculus c;
    for (int i = 0; i < 50; ++i) {
        Ordinal a = i % 2 ? random_below_omega_omega(rng, 3, 5, 4) : random_below(rng, E0, 3, 4);
        if (a.is_zero()) a = 1;
        Ordinal k = c.kappa(a);
        t(c.le1(k, add(k, k)).value == Tri::False, format(a));
    }
    for (unsigned n = 1; n <= 10; ++n) t(c.le1(E0, mul_nat(E0, n)).value == Tri::True, "e0*" + std::to_string(n));
    Calculus s({1, 1, true});
    t(exact(s.max1_kappa(E0)) == P("w^(e0+1)+e0"), "sequel max1(e0)");
}

void incompressibility(Tally& t, std::uint64_t seed) {
    Budget budget;
    Calculus c;
    for (unsigned n = 0; n <= 6; ++n) {
        std::vector<Ordinal> s;
        for (unsigned i = 0; i <= n; ++i) s.push_back(i);
        t(verify_incompressible(c, ClosedSet(s, 1), budget).kind == VerifyResult::Confirmed, "{0.." + std::to_string(n) + "}");
    }
    Rng rng(seed + 6);
    size_t confirmed = 0;
    for (int i = 0; i < 100; ++i) {
        ClosedSet x = i % 2 ? random_closed_set(rng, 1, 4, 3) : random_linked_set(rng, c, 1, 2, 3);
        Calculus other;
        CoveringMap h = incompressible_cover(c, x), h2 = incompressible_cover(other, x);
        VerifyResult v = verify_incompressible(c, ClosedSet(h.image, 1), budget);
        t(v.kind != VerifyResult::Counterexample, "cover of max " + format(x.max()));
        confirmed += v.kind == VerifyResult::Confirmed;
        for (size_t j = 0; j < h.image.size(); ++j)
            t(exact(c.index(h.image[j])) == exact(other.index(h2.image[j])), "index agreement");
    }
    t.detail = std::to_string(confirmed) + " of 100 covers confirmed";
}

void oracle_agreement(Tally& t, std::uint64_t) {
    Calculus c;
    Budget b;
    b.coeff = 9;
    size_t found = 0;
    struct Case {
        std::vector<const char*> y;
        const char* bound;
    };
    const Case cases[] = {{{"w", "w+1"}, "w*10"}, {{"0"}, "w*3"}, {{"1", "2"}, "w+5"}, {{"w"}, "w^2*2"},
                          {{"w^2", "w^2+2"}, "w^2*3"}, {{"w", "w*2", "w*2+1"}, "w*6"}};
    for (const auto& cs : cases) {
        std::vector<Ordinal> y;
        for (auto s : cs.y) y.push_back(P(s));
        SearchResult r = covering_search(c, ClosedSet(y, 1), P(cs.bound), b);
        t(!r.truncated, "search truncated");
        Calculus fresh;
        auto oracle = oracle_of(fresh);
        for (const auto& h : r.coverings) {
            ++found;
            t(certify_covering(h, oracle, 1).verdict == Tri::True, "recertify");
        }
    }
    SearchResult r = covering_search(c, ClosedSet({W, P("w+1")}, 1), P("w*10"), b);
    std::vector<std::vector<Ordinal>> want, got;
    for (unsigned k = 1; k <= 9; ++k) want.push_back({mul_nat(W, k), add(mul_nat(W, k), 1)});
    for (const auto& h : r.coverings) got.push_back(h.image);
    t(got == want, "{w, w+1} coverings below w*10");
    t.detail = std::to_string(found) + " coverings re-certified";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "PRNG seed");
    CLI11_PARSE(app, argc, argv);

    const std::pair<const char*, std::function<void(Tally&, std::uint64_t)>> criteria[] = {
        {"exact values at rho=1", exact_values},
        {"additivity on 200 pairs", additivity},
        {"second recurrence on 50 samples", srt},
        {"pattern axioms on 500 closed sets", axioms},
        {"first recurrence isomorphisms on 30 pairs", first_recurrence},
        {"small interval translation at e0", small_intervals},
        {"nu chain", nu_chain},
        {"epsilon gap and lower bound", epsilon_gap},
        {"incompressibility", incompressibility},
        {"covering search re-certification", oracle_agreement},
    };
    int failed = 0;
    int i = 0;
    for (const auto& [name, run] : criteria) {
        ++i;
        Tally t;
        auto start = std::chrono::steady_clock::now();
        try {
            run(t, seed);
        } catch (const std::exception& e) {
            t.bad.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = t.bad.empty();
        failed += !ok;
        std::printf("criterion %d: %s  %s (%zu checks, %.2fs%s%s)\n", i, ok ? "PASS" : "FAIL", name, t.checks, secs,
                    t.detail.empty() ? "" : "; ", t.detail.c_str());
        for (const auto& b : t.bad)
            if (!b.empty()) std::printf("    %s\n", b.c_str());
    }
    return failed ? 1 : 0;
}
