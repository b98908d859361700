#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/gmodule.hpp"
#include "invar/parser.hpp"

using namespace invar;

namespace {

Scalar I(long long v) { return Scalar::integer(v); }

struct H27Fixture {
    FiniteGroup G;
    GModule V;

    H27Fixture() : G(make_group()), V(make_module(G)) {}

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
        ctx.nvars = V.dim();
        for (int i = 0; i < V.dim(); ++i) ctx.variables[V.var_names()[i]] = i;
        return ctx;
    }
};

} // namespace

TEST_CASE("variable naming and grading") {
    H27Fixture fx;
    CHECK(fx.V.dim() == 3);
    CHECK(fx.V.var_names() == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(fx.V.grading(2) == 0);
}

TEST_CASE("b fixes x1*x2*x3 and e acts trivially") {
    H27Fixture fx;
    auto ctx = fx.pctx();
    auto f = parse_polynomial("x1*x2*x3", ctx);
    int b = fx.G.generator_element(1);
    CHECK(fx.V.act(b, f) == f);
    CHECK(fx.V.act(fx.G.identity(), f) == f);
    // b permutes the cubes cyclically
    auto x1c = parse_polynomial("x1^3", ctx);
    auto img = fx.V.act(b, x1c);
    CHECK((img == parse_polynomial("x2^3", ctx) || img == parse_polynomial("x3^3", ctx)));
}

TEST_CASE("action axioms on random data") {
    H27Fixture fx;
    auto ctx = fx.pctx();
    Rng rng(5);
    auto rand_poly = [&]() {
        SparsePolynomial f(3);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> e{static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)),
                               static_cast<int>(rng.below(3))};
            f.add_term(Monomial(e), Scalar::integer(rng.range(-2, 2)));
        }
        return f;
    };
    for (int it = 0; it < 200; ++it) {
        int g = static_cast<int>(rng.below(27));
        int h = static_cast<int>(rng.below(27));
        auto f = rand_poly();
        CHECK(fx.V.act(g, fx.V.act(h, f)) == fx.V.act(fx.G.multiply(g, h), f));
    }
    // multiplicativity
    auto f = rand_poly();
    auto h = rand_poly();
    int g = 7 % 27;
    CHECK(fx.V.act(g, f * h) == fx.V.act(g, f) * fx.V.act(g, h));
}

TEST_CASE("act preserves multidegree and evaluate compatibility") {
    H27Fixture fx;
    auto ctx = fx.pctx();
    Rng rng(11);
    auto f = parse_polynomial("x1^2*x2 + 2*x1*x2*x3 - x3^3", ctx);
    CHECK(fx.V.is_multihomogeneous(f));
    for (int it = 0; it < 50; ++it) {
        int g = static_cast<int>(rng.below(27));
        auto gf = fx.V.act(g, f);
        CHECK(fx.V.multidegree_of(gf.terms().begin()->first) == fx.V.multidegree_of(f.terms().begin()->first));
        std::vector<Scalar> v{I(rng.range(-2, 2)), I(rng.range(-2, 2)), I(rng.range(-2, 2))};
        // (g.f)(v) = f(g^{-1} v)
        CHECK(fx.V.evaluate(gf, v) == fx.V.evaluate(f, fx.V.apply_element(fx.G.inverse(g), v)));
    }
}

TEST_CASE("monomials of multidegree enumerate the cell") {
    H27Fixture fx;
    auto mons = fx.V.monomials_of_multidegree(Multidegree{{3}});
    CHECK(mons.size() == 10);
    CHECK(fx.V.monomials_of_total_degree(3).size() == 10);
}

TEST_CASE("stabilizer of [1,1,1] is the cyclic subgroup generated by b") {
    H27Fixture fx;
    auto stab = fx.V.stabilizer({I(1), I(1), I(1)});
    CHECK(stab.size() == 3);
    auto sub = fx.G.subgroup_generated({fx.G.generator_element(1)});
    CHECK(stab == sub);
    // zero vector is stabilized by everything
    CHECK(fx.V.stabilizer({I(0), I(0), I(0)}).size() == 27);
}

TEST_CASE("orbit-stabilizer counting on random points") {
    H27Fixture fx;
    Rng rng(3);
    for (int it = 0; it < 50; ++it) {
        std::vector<Scalar> v{I(rng.range(-2, 2)), I(rng.range(-2, 2)), I(rng.range(-2, 2))};
        auto stab = fx.V.stabilizer(v);
        std::set<std::string> orb;
        for (int g = 0; g < 27; ++g) {
            auto img = fx.V.apply_element(g, v);
            std::string key;
            for (const auto& s : img) key += s.to_string() + "|";
            orb.insert(key);
        }
        CHECK(orb.size() * stab.size() == 27);
    }
}

TEST_CASE("rescale_summand") {
    H27Fixture fx;
    std::vector<Scalar> v{I(1), I(2), I(0)};
    auto w = fx.V.rescale_summand(v, 0, I(-1));
    CHECK(w == std::vector<Scalar>{I(-1), I(-2), I(0)});
    CHECK(fx.V.rescale_summand(v, 0, I(1)) == v);
    CHECK_THROWS_AS(fx.V.rescale_summand(v, 0, I(0)), Error);
}

TEST_CASE("twist by an automorphism preserves dimension and changes traces consistently") {
    H27Fixture fx;
    int a = fx.G.generator_element(0);
    int b = fx.G.generator_element(1);
    int c = fx.G.generator_element(2);
    int c2 = fx.G.multiply(c, c);
    Automorphism alpha = Automorphism::from_generator_images(fx.G, {fx.G.multiply(a, a), b, c2});
    GModule T = fx.V.twist_by_automorphism(alpha);
    CHECK(T.dim() == fx.V.dim());
    for (int g = 0; g < fx.G.order(); ++g) CHECK(T.character_value(g) == fx.V.character_value(alpha.apply(g)));
    // identity twist gives equal traces
    std::vector<int> idimg{a, b, c};
    GModule T2 = fx.V.twist_by_automorphism(Automorphism::from_generator_images(fx.G, idimg));
    for (int g = 0; g < fx.G.order(); ++g) CHECK(T2.character_value(g) == fx.V.character_value(g));
}

TEST_CASE("reduction to GF(4) keeps the representation property") {
    H27Fixture fx;
    const GFTable* F4 = gf_field(2, 2);
    GModule R = fx.V.reduce_to_field(F4);
    CHECK(R.is_gf());
    CHECK(R.cyclotomic_source() != nullptr);
    // stabilizer structure survives reduction for [1,1,1]
    auto one = Scalar::gf(F4, 1);
    CHECK(R.stabilizer({one, one, one}).size() == 3);
}

TEST_CASE("summand kernel of a faithful module is trivial") {
    H27Fixture fx;
    CHECK(fx.V.summand_kernel(0).size() == 1);
}
