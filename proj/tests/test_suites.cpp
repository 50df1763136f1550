#include "resemblance/serialize.hpp"
#include "resemblance/suites.hpp"

#include <doctest.h>

using namespace resemblance;

TEST_CASE("self-check suites pass") {
    for (const char* rho : {"1", "w", "w^2"})
        for (const auto& name : suite_names()) {
            Config cfg{parse(rho)};
            SuiteReport r = run_suite(name, cfg, 2024, Budget{});
            CAPTURE(rho);
            CAPTURE(name);
            CHECK(r.checks > 0);
            CHECK(r.failures.empty());
        }
}

TEST_CASE("json shapes") {
    Calculus c;
    Json j = relation_json(c, "le1", c.le1(parse("w"), parse("w+1")), parse("w"));
    CHECK(j["verdict"] == "True");
    CHECK(j["trace"].size() >= 1);
    CHECK(j["values"]["kappa"] == "w");
    CHECK(j["values"]["max1"] == "w+1");
    CHECK(j["values"]["index"] == "w");
    ClosedSet s({parse("w"), parse("w+1")}, 1);
    CHECK(to_json(s).dump() == R"(["w","w+1"])");
}
