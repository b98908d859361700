#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/linalg.hpp"
#include "invar/parser.hpp"
#include "invar/polynomial.hpp"

using namespace invar;

namespace {
ParseContext ctx2() {
    ParseContext ctx;
    ctx.nvars = 2;
    ctx.variables = {{"x1", 0}, {"x2", 1}};
    return ctx;
}
} // namespace

TEST_CASE("grevlex ordering in two variables") {
    auto mons = monomials_of_degree(2, 3);
    REQUIRE(mons.size() == 4);
    CHECK(mons[0].e == std::vector<int>{3, 0});
    CHECK(mons[1].e == std::vector<int>{2, 1});
    CHECK(mons[2].e == std::vector<int>{1, 2});
    CHECK(mons[3].e == std::vector<int>{0, 3});
}

TEST_CASE("monomial counts") {
    CHECK(monomials_of_degree(2, 0).size() == 1);
    CHECK(monomials_of_degree(4, 8).size() == 165); // C(11,3)
}

TEST_CASE("polynomial arithmetic and parsing") {
    auto ctx = ctx2();
    auto f = parse_polynomial("(x1+x2)^2", ctx);
    auto g = parse_polynomial("x1^2 + 2*x1*x2 + x2^2", ctx);
    CHECK(f == g);
    auto h = parse_polynomial("(x1-x2)*(x1+x2)", ctx);
    CHECK(h == parse_polynomial("x1^2 - x2^2", ctx));
    CHECK(parse_polynomial("x1 - x1", ctx).is_zero());
    CHECK(parse_polynomial("1/2*(x1+x1)", ctx) == parse_polynomial("x1", ctx));
}

TEST_CASE("evaluation") {
    auto ctx = ctx2();
    auto f = parse_polynomial("x1^3 - x2^3", ctx);
    CHECK(f.evaluate({Scalar::integer(2), Scalar::integer(1)}) == Scalar::integer(7));
    CHECK(f.evaluate({Scalar::integer(0), Scalar::integer(0)}).is_zero());
}

TEST_CASE("scalar parsing with constants") {
    ParseContext ctx;
    ctx.constants["om"] = Scalar::zeta(3);
    Scalar s = parse_scalar("1/2*(-1 - om^2) + 3", ctx);
    CHECK(s == Scalar::rational(Rat(5, 2)) + Scalar::zeta(3).pow(2) * Scalar::rational(Rat(-1, 2)));
    CHECK(parse_scalar("om^-1", ctx) == Scalar::zeta(3).pow(2));
    CHECK_THROWS_AS(parse_scalar("nope", ctx), Error);
}

TEST_CASE("row space rank and rref determinism") {
    // rows over Q: the span of (1,1,0),(0,1,1) with a dependent third row
    RowSpace rs(3);
    auto row = [](int a, int b, int c) {
        return std::vector<Scalar>{Scalar::integer(a), Scalar::integer(b), Scalar::integer(c)};
    };
    CHECK(rs.insert(row(1, 1, 0)));
    CHECK(rs.insert(row(0, 1, 1)));
    CHECK_FALSE(rs.insert(row(1, 2, 1)));
    CHECK(rs.rank() == 2);
    CHECK(rs.contains(row(2, 3, 1)));
    CHECK_FALSE(rs.contains(row(0, 0, 1)));
    auto r = rs.rref();
    CHECK(r[0] == row(1, 0, -1));
    CHECK(r[1] == row(0, 1, 1));
}

TEST_CASE("row space over a cyclotomic field") {
    Scalar w = Scalar::zeta(3);
    RowSpace rs(2);
    CHECK(rs.insert({w, Scalar::integer(1)}));
    CHECK_FALSE(rs.insert({w * w, w})); // w * first row
    CHECK(rs.insert({Scalar::integer(1), Scalar::integer(0)}));
    CHECK(rs.rank() == 2);
}

TEST_CASE("row space over GF(4)") {
    const GFTable* F = gf_field(2, 2);
    auto s = [&](int v) { return Scalar::gf(F, v); };
    RowSpace rs(2);
    CHECK(rs.insert({s(2), s(1)}));
    CHECK_FALSE(rs.insert({s(3), F->mul(3, F->inv(2)) == 0 ? s(0) : s(F->mul(1, F->mul(3, F->inv(2))))}));
    CHECK(rs.rank() == 1);
}

TEST_CASE("size guard trips on absurd enumerations") {
    auto saved = config().monomial_guard;
    config().monomial_guard = 10;
    CHECK_THROWS_AS(monomials_of_degree(6, 12), Error);
    config().monomial_guard = saved;
}
