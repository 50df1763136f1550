#include "resemblance/ordinal.hpp"

#include <doctest.h>

using namespace resemblance;

namespace {
Ordinal P(const char* s) { return parse(s, 2); }
std::string F(const char* s) { return format(P(s)); }
}

TEST_CASE("parse and format round trip") {
    for (const char* s : {"0", "7", "w", "w+1", "w*3+2", "w^2", "w^w", "w^(w+1)*2+w^3", "e0", "e0*2+5",
                          "w^(e0+1)", "e1+e0*3+w", "w^w^w"})
        CHECK(format(P(s)) == s);
    CHECK(F("w+w") == "w*2");
    CHECK(F("w^(w)*2+w+3") == "w^w*2+w+3");
    CHECK(F("1+w") == "w");
    CHECK(F("w+w^2") == "w^2");
    CHECK(F("w^e0") == "e0");
    CHECK(F("w^(e0)*2") == "e0*2");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse("w+"), Error);
    CHECK_THROWS_AS(parse("e1", 1), Error);
    CHECK_THROWS_AS(parse("w^(2"), Error);
    CHECK_THROWS_AS(parse("w*w"), Error);
    CHECK_THROWS_AS(parse("(w+1)*3"), Error);
    try {
        parse("e3", 1);
    } catch (const Error& e) {
        CHECK(e.code() == "BoundExceeded");
    }
}

TEST_CASE("comparison") {
    CHECK(P("w") < P("w+1"));
    CHECK(P("w*2") > P("w+100"));
    CHECK(P("w^w") < P("e0"));
    CHECK(P("e0") < P("e0+1"));
    CHECK(P("w^(e0+1)") > P("e0*1000"));
    CHECK(P("e1") > P("w^(w^(e0+1))"));
    CHECK(P("3") == Ordinal(3));
}

TEST_CASE("arithmetic") {
    CHECK(add(P("w^2+w"), P("w^2")) == P("w^2*2"));
    CHECK(add(P("5"), P("w")) == P("w"));
    CHECK(mul(P("w+1"), P("w")) == P("w^2"));
    CHECK(mul(P("w"), P("w+1")) == P("w^2+w"));
    CHECK(mul(P("e0"), P("2")) == P("e0*2"));
    CHECK(mul_nat(P("w^2+3"), 4) == P("w^2*4+3"));
    CHECK(omega_pow(P("w")) == P("w^w"));
    CHECK(omega_pow(P("e0")) == P("e0"));
    CHECK(sub_left(P("w"), P("w^2+1")) == P("w^2+1"));
    CHECK(sub_left(P("w^2+w"), P("w^2+w*3+1")) == P("w*2+1"));
    CHECK_THROWS_AS(sub_left(P("w+2"), P("w+1")), Error);
    Nat big = Nat(1) << 200;
    CHECK(add(Ordinal::nat(big), 1) == Ordinal::nat(big + 1));
    CHECK(format(Ordinal::nat(big)) == big.str());
}

TEST_CASE("classification") {
    CHECK(is_successor(P("w+1")));
    CHECK(is_limit(P("w^2+w")));
    CHECK(!is_limit(P("0")));
    CHECK(is_indecomposable(P("w^3")));
    CHECK(!is_indecomposable(P("w*2")));
    CHECK(epsilon_index(P("e1")) == 1);
    CHECK(!epsilon_index(P("w^w")));
    CHECK(degree(P("w^3*2+w")) == P("3"));
    CHECK(max_epsilon(P("w^(e0+1)+e0")) == 0);
    CHECK(max_epsilon(P("w^3")) == -1);
    auto lt = cnf_last_term(P("w^2+w*3"));
    CHECK(lt.prefix == P("w^2+w*2"));
    CHECK(lt.last_exponent == P("1"));
}

TEST_CASE("rho division") {
    auto s = rho_split(P("w^3+w^2*2+w+5"), P("w^2"));
    CHECK(s.q == P("w^3+w^2*2"));
    CHECK(s.rem == P("w+5"));
    CHECK(rho_quotient(P("w^3+w^2*2+w+5"), P("w^2")) == P("w+2"));
    CHECK(divisible(P("w^2*3"), P("w^2")));
    CHECK(!divisible(P("w^2*3+w"), P("w^2")));
    CHECK(limit_multiple(P("w^3"), P("w^2")));
    CHECK(!limit_multiple(P("w^2*3"), P("w^2")));
    CHECK(rho_exponent(P("w^2")) == P("2"));
    CHECK_THROWS_AS(check_rho(P("4")), Error);
    CHECK_THROWS_AS(check_rho(P("w*2")), Error);
    CHECK_NOTHROW(check_rho(P("1")));
}

TEST_CASE("extended values") {
    CHECK(format(Ext::of(P("w"))) == "w");
    CHECK_THROWS_AS(Ext::undetermined().get(), Error);
    CHECK_THROWS_AS(Ext::unbounded().get(), Error);
}
