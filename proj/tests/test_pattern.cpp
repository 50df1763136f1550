#include "resemblance/pattern_oracle.hpp"
#include "resemblance/sampling.hpp"

#include <doctest.h>

using namespace resemblance;

namespace {
Ordinal P(const char* s) { return parse(s); }
std::vector<Ordinal> V(std::initializer_list<const char*> xs) {
    std::vector<Ordinal> v;
    for (auto x : xs) v.push_back(P(x));
    return v;
}
const Ordinal W = Ordinal::omega();
bool has(const std::vector<std::string>& v, const std::string& name) {
    return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.rfind(name, 0) == 0; });
}
}

TEST_CASE("extract_pattern") {
    Calculus c;
    auto p = extract_pattern(c, ClosedSet(V({"w", "w+1"}), 1));
    CHECK(p.le1[0][1] == Tri::True);
    auto q = extract_pattern(c, ClosedSet(V({"0"}), 1));
    CHECK(q.n == 1);
    CHECK(q.le1[0][0] == Tri::True);
    CHECK(q.le2[0][0] == Tri::True);
    auto e = extract_pattern(c, ClosedSet(V({"e0", "e0+w", "e0*2"}), 1));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            if (i != j) CHECK(e.le2[i][j] == Tri::False);
    CHECK(e.le1[0][1] == Tri::True);
    CHECK(e.le1[0][2] == Tri::True);
    CHECK(e.le1[1][2] == Tri::False);
}

TEST_CASE("check_axioms") {
    Calculus c;
    auto p = extract_pattern(c, ClosedSet(V({"w", "w+1"}), 1));
    CHECK(check_axioms(p).empty());
    p.le2[0][1] = Tri::True;
    p.le1[0][1] = Tri::False;
    auto v = check_axioms(p);
    CHECK(has(v, "respects(<=2,<=1)"));
    auto f = extract_pattern(c, ClosedSet(V({"0", "1", "2"}), 1));
    f.le1[0][2] = Tri::True;
    f.le1[1][2] = Tri::True;
    auto fv = check_axioms(f);
    CHECK(has(fv, "forest(<=1)"));
}

TEST_CASE("sampled patterns are lawful") {
    Rng rng(33);
    for (const Ordinal& rho : {Ordinal(1), W}) {
        Calculus c({rho});
        for (int i = 0; i < 100; ++i) {
            ClosedSet x = i % 2 ? random_closed_set(rng, rho, 5, 4) : random_linked_set(rng, c, 2, 3, 4);
            CHECK(check_axioms(extract_pattern(c, x)).empty());
        }
    }
}

TEST_CASE("iso_check") {
    Calculus c;
    CHECK(iso_check(c, V({"w", "w+1"}), V({"w*2", "w*2+1"})) == Iso::Isomorphic);
    std::vector<Ordinal> a = V({"1", "2", "w", "w+1"}), b;
    for (const auto& x : a) b.push_back(add(P("e0*2"), x));
    CHECK(iso_check(c, a, b) == Iso::Isomorphic);
    Calculus cw({W});
    CHECK(iso_check(cw, V({"0", "1"}), V({"0", "2"})) == Iso::Distinct);
    CHECK_THROWS_AS(iso_check(c, V({"0"}), V({"0", "1"})), Error);
    CHECK(iso_check(Calculus({1, 2}), {Ordinal::epsilon(0)}, {Ordinal::epsilon(1)}) != Iso::Distinct);
}

TEST_CASE("covering_search") {
    Calculus c;
    Budget b;
    b.coeff = 9;
    auto s = covering_search(c, ClosedSet(V({"w", "w+1"}), 1), P("w*10"), b);
    std::vector<std::vector<Ordinal>> got;
    for (const auto& h : s.coverings) got.push_back(h.image);
    std::vector<std::vector<Ordinal>> want;
    for (unsigned k = 1; k <= 9; ++k) want.push_back({mul_nat(W, k), add(mul_nat(W, k), 1)});
    CHECK(got == want);
    auto z = covering_search(c, ClosedSet(V({"0"}), 1), P("w*2"), b);
    auto u = enumerate_universe(P("w*2"), b, 1);
    CHECK(z.coverings.size() == u.items.size());
    for (const auto& h : s.coverings) CHECK(certify_covering(h, oracle_of(c), 1).verdict == Tri::True);
}

TEST_CASE("dot export") {
    Calculus c;
    std::string d = to_dot(extract_pattern(c, ClosedSet(V({"w", "w+1"}), 1)));
    CHECK(d.find("digraph") != std::string::npos);
}
