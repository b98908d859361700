#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/parser.hpp"
#include "invar/separation.hpp"

using namespace invar;

namespace {

Scalar I(long long v) { return Scalar::integer(v); }

struct H27 {
    FiniteGroup G;
    GModule V;
    H27() : G(make_group()), V(make_module(G)) {}
    static FiniteGroup make_group() {
        Scalar w = Scalar::zeta(3);
        Matrix A{{I(1), I(0), I(0)}, {I(0), w, I(0)}, {I(0), I(0), w * w}};
        Matrix B{{I(0), I(0), I(1)}, {I(1), I(0), I(0)}, {I(0), I(1), I(0)}};
        Matrix C{{w, I(0), I(0)}, {I(0), w, I(0)}, {I(0), I(0), w}};
        return FiniteGroup::close_group({A, B, C}, 32, {"a", "b", "c"});
    }
    static GModule make_module(const FiniteGroup& G) {
        Scalar w = Scalar::zeta(3);
        Matrix A{{I(1), I(0), I(0)}, {I(0), w, I(0)}, {I(0), I(0), w * w}};
        Matrix B{{I(0), I(0), I(1)}, {I(1), I(0), I(0)}, {I(0), I(1), I(0)}};
        Matrix C{{w, I(0), I(0)}, {I(0), w, I(0)}, {I(0), I(0), w}};
        return GModule::build(G, {{"W", {A, B, C}}}, {});
    }
    ParseContext pctx() const {
        ParseContext ctx;
        ctx.nvars = 3;
        ctx.variables = {{"x1", 0}, {"x2", 1}, {"x3", 2}};
        return ctx;
    }
};

} // namespace

TEST_CASE("orbit size divides the group order; orbit equality is an equivalence") {
    H27 fx;
    Rng rng(23);
    for (int it = 0; it < 50; ++it) {
        std::vector<Scalar> v{I(rng.range(-2, 2)), I(rng.range(-2, 2)), I(rng.range(-2, 2))};
        auto orb = orbit(fx.V, v);
        CHECK(27 % orb.size() == 0);
        // reflexive + symmetric + transitive on a random triple from the orbit
        auto w = orb[rng.below(orb.size())];
        auto u = orb[rng.below(orb.size())];
        CHECK(orbits_equal(fx.V, v, v));
        CHECK(orbits_equal(fx.V, v, w));
        CHECK(orbits_equal(fx.V, w, u));
    }
}

TEST_CASE("H27 witness pair: agreement to 8, separation at 9 by f4") {
    H27 fx;
    auto ctx = fx.pctx();
    std::vector<Scalar> v{I(1), I(2), I(0)};
    std::vector<Scalar> v2{I(2), I(1), I(0)};
    CHECK_FALSE(orbits_equal(fx.V, v, v2));

    InvariantContext ic(fx.V);
    auto res = agree_up_to_degree(ic, v, v2, 8);
    CHECK(res.agree);
    auto res9 = agree_up_to_degree(ic, v, v2, 9);
    CHECK_FALSE(res9.agree);
    REQUIRE(res9.separator.has_value());
    CHECK(res9.separator->degree() == 9);

    auto f4 = parse_polynomial("x1^3*x2^6 + x1^6*x3^3 + x2^3*x3^6", ctx);
    CHECK(fx.V.evaluate(f4, v) == I(64));
    CHECK(fx.V.evaluate(f4, v2) == I(8));

    auto cert = make_certificate(ic, "27_3", {"W"}, v, v2, 8, f4, "f4");
    verify_certificate(ic, cert);

    // round trip
    std::string js = certificate_to_json(cert);
    auto back = certificate_from_json(js, fx.V);
    verify_certificate(ic, back);
    CHECK(certificate_to_json(back) == js);

    // tampering with the separator must fail the invariance check
    auto bad = cert;
    bad.separator = parse_polynomial("x1^9", ctx);
    bad.value_v = fx.V.evaluate(bad.separator, v);
    bad.value_v2 = fx.V.evaluate(bad.separator, v2);
    try {
        verify_certificate(ic, bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvarianceFailure);
    }
}

TEST_CASE("v = v2 agrees for all degrees") {
    H27 fx;
    InvariantContext ic(fx.V);
    std::vector<Scalar> v{I(1), I(1), I(2)};
    CHECK(agree_up_to_degree(ic, v, v, 6).agree);
}

TEST_CASE("zero locus: forward direction of the stabilizer criterion") {
    H27 fx;
    Scalar w = Scalar::zeta(3);
    // chi(a) = w: the subgroup <a,c> stabilizes e1 only partially; use structured points
    Character chi = Character::validate_character(fx.G, {w, I(1), I(1)}, "(w,1)");
    InvariantContext ic(fx.V);
    std::vector<std::vector<Scalar>> pts{
        {I(0), I(0), I(0)}, // stab = G, not inside ker(chi)
        {I(1), I(1), I(1)}, // stab = <b>
        {I(1), I(2), I(0)}, // generic
        {I(1), I(0), I(0)},
    };
    auto rep = zero_locus_check(ic, chi, 4, pts);
    CHECK(rep.forward_violations == 0);
    CHECK(rep.rows[0].stab_outside_kernel);
    CHECK(rep.rows[0].all_vanish);
}

TEST_CASE("finite field beta_sep for H27 over GF(4) is 6") {
    H27 fx;
    const GFTable* F4 = gf_field(2, 2);
    GModule R = fx.V.reduce_to_field(F4);
    auto res = finite_field_beta_sep(R, 8);
    CHECK(res.point_count == 64);
    CHECK(res.value == 6);
}

TEST_CASE("GF(4) evidence: degree-3 functions do not separate 0 from [1,1,0]") {
    H27 fx;
    const GFTable* F4 = gf_field(2, 2);
    GModule R = fx.V.reduce_to_field(F4);
    InvariantContext ic(R);
    auto z = Scalar::gf(F4, 0);
    auto o = Scalar::gf(F4, 1);
    std::vector<std::vector<Scalar>> pts{{z, z, z}, {o, o, z}};
    CHECK_FALSE(orbits_equal(R, pts[0], pts[1]));
    auto fp = invariant_fingerprints(ic, 3, pts);
    CHECK(fp[0] == fp[1]);
    // f3 = x1^3 x2^3 + x1^3 x3^3 + x2^3 x3^3 separates with values 0 and 1
    ParseContext ctx;
    ctx.nvars = 3;
    ctx.variables = {{"x1", 0}, {"x2", 1}, {"x3", 2}};
    auto f3 = parse_polynomial("x1^3*x2^3 + x1^3*x3^3 + x2^3*x3^3", ctx);
    SparsePolynomial f3gf(3);
    for (const auto& [m, c] : f3.terms()) f3gf.add_term(m, R.to_field(c));
    CHECK(R.evaluate(f3gf, pts[0]) == z);
    CHECK(R.evaluate(f3gf, pts[1]) == o);
}

TEST_CASE("trivial group over GF(4): one variable separates at degree 1") {
    FiniteGroup T = FiniteGroup::close_group({Matrix{{I(1)}}}, 2);
    GModule M = GModule::build(T, {{"V", {Matrix{{I(1)}}}}}, {});
    GModule R = M.reduce_to_field(gf_field(2, 2));
    CHECK(finite_field_beta_sep(R, 3).value == 1);
}
