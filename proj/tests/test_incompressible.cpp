#include "resemblance/incompressible.hpp"
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
}

TEST_CASE("cover") {
    Calculus c;
    ClosedSet seg(V({"0", "1", "2", "3", "4"}), 1);
    CHECK(incompressible_cover(c, seg).image == seg.members());
    CHECK(incompressible_cover(c, ClosedSet(V({"w*5"}), 1)).image == V({"0"}));
    CHECK(incompressible_cover(c, ClosedSet()).image.empty());
    CHECK(incompressible_cover(c, ClosedSet(V({"w^w", "w^w+w+1"}), 1)).image == V({"w", "w+1"}));
}

TEST_CASE("verify") {
    Calculus c;
    Budget b;
    CHECK(verify_incompressible(c, ClosedSet(V({"0", "1", "2"}), 1), b).kind == VerifyResult::Confirmed);
    auto v = verify_incompressible(c, ClosedSet(V({"w*5"}), 1), b);
    REQUIRE(v.kind == VerifyResult::Counterexample);
    CHECK(v.witness->image == V({"0"}));
    CHECK(verify_incompressible(c, ClosedSet(), b).kind == VerifyResult::Confirmed);
    CHECK(verify_incompressible(c, ClosedSet(V({"w^2", "w^2+1", "w^2+2"}), 1), b).kind == VerifyResult::Confirmed);
    CHECK(verify_incompressible(c, ClosedSet(V({"w^3", "w^3+1", "w^3+3"}), 1), b).kind == VerifyResult::Counterexample);
    CHECK(std::string(verify_name(VerifyResult::Counterexample)) == "CounterexampleMap");
}

TEST_CASE("index sets") {
    Calculus c;
    CHECK(build_from_index_set(c, V({"0", "1", "2", "3"})).base.members() == V({"0", "1", "2", "3"}));
    CHECK(build_from_index_set(c, V({"w"})).base.members() == V({"w", "w+1"}));
    CHECK(index_set_violations(c, V({"0", "2"})) == std::vector<int>{3});
    try {
        build_from_index_set(c, V({"0", "2"}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "ClauseViolation");
    }
    auto k = close_index_set(c, V({"w"}));
    CHECK(index_set_violations(c, k).empty());
}

TEST_CASE("extend") {
    Calculus c;
    auto x = extend_incompressible(c, V({"w+1"}));
    CHECK(x.base.members() == V({"w", "w+1"}));
    CHECK(extend_incompressible(c, {}).base.empty());
    auto y = extend_incompressible(c, V({"0", "1", "2"}));
    CHECK(y.base.members() == V({"0", "1", "2"}));
}

TEST_CASE("covers are incompressible and index stable") {
    Rng rng(21);
    for (const Ordinal& rho : {Ordinal(1), W}) {
        Calculus c({rho});
        Budget b;
        for (int i = 0; i < 25; ++i) {
            ClosedSet x = i % 2 ? random_closed_set(rng, rho, 3, 3) : random_linked_set(rng, c, 1, 2, 3);
            CoveringMap h = incompressible_cover(c, x);
            CoveringMap h2 = incompressible_cover(c, x);
            for (size_t j = 0; j < h.image.size(); ++j) CHECK(c.index(h.image[j]).get() == c.index(h2.image[j]).get());
            CHECK(certify_covering(h, oracle_of(c), rho).verdict != Tri::False);
            CHECK(verify_incompressible(c, ClosedSet(h.image, rho), b).kind != VerifyResult::Counterexample);
        }
    }
}
