#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/invariants.hpp"
#include "invar/parser.hpp"

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
        ctx.nvars = V.dim();
        for (int i = 0; i < V.dim(); ++i) ctx.variables[V.var_names()[i]] = i;
        return ctx;
    }
};

// binary tetrahedral group acting on K^2, xi of order 8
struct A4tilde {
    FiniteGroup G;
    GModule V;
    A4tilde() : G(make_group()), V(make_module(G)) {}
    static std::vector<Matrix> gens() {
        Scalar xi = Scalar::zeta(8);
        Scalar half = Scalar::rational(Rat(1, 2));
        Scalar xi2 = xi * xi;
        Matrix A{{xi2, I(0)}, {I(0), -xi2}};
        Matrix B{{half * (-I(1) - xi2), half * (I(1) + xi2)}, {half * (-I(1) + xi2), half * (-I(1) + xi2)}};
        return {A, B};
    }
    static FiniteGroup make_group() { return FiniteGroup::close_group(gens(), 32, {"a", "b"}); }
    static GModule make_module(const FiniteGroup& G) { return GModule::build(G, {{"V", gens()}}, {}); }
    ParseContext pctx() const {
        ParseContext ctx;
        ctx.nvars = 2;
        ctx.variables = {{"x1", 0}, {"x2", 1}};
        ctx.constants["xi"] = Scalar::zeta(8);
        return ctx;
    }
};

} // namespace

TEST_CASE("H27: Reynolds projection of x1^3") {
    H27 fx;
    auto ctx = fx.pctx();
    InvariantContext ic(fx.V);
    auto p = project_weight(fx.V, parse_polynomial("x1^3", ctx), ic.trivial_character());
    auto expected = parse_polynomial("1/3*(x1^3+x2^3+x3^3)", ctx);
    CHECK(p == expected);
    // Reynolds fixes invariants
    auto f = parse_polynomial("x1*x2*x3", ctx);
    CHECK(project_weight(fx.V, f, ic.trivial_character()) == f);
}

TEST_CASE("H27: degree-3 invariants are spanned by x1x2x3 and the cube sum") {
    H27 fx;
    auto ctx = fx.pctx();
    InvariantContext ic(fx.V);
    auto b = weight_space_basis(ic, ic.trivial_character(), 3);
    CHECK(b.dim() == 2);
    auto mons = fx.V.monomials_of_total_degree(3);
    RowSpace span(mons.size());
    for (const auto& f : b.basis) span.insert(f.coefficient_row(mons, I(0)));
    CHECK(span.contains(parse_polynomial("x1*x2*x3", ctx).coefficient_row(mons, I(0))));
    CHECK(span.contains(parse_polynomial("x1^3+x2^3+x3^3", ctx).coefficient_row(mons, I(0))));
}

TEST_CASE("H27: oracle matches constructed dimensions for all nine weights") {
    H27 fx;
    Scalar w = Scalar::zeta(3);
    InvariantContext ic(fx.V);
    std::vector<Character> chars;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            chars.push_back(Character::validate_character(
                fx.G, {w.pow(i), w.pow(j), I(1)}, "(" + std::to_string(i) + "," + std::to_string(j) + ")"));
    int cells = 0;
    for (const auto& chi : chars)
        for (int d = 0; d <= 6; ++d) {
            auto basis = weight_space_basis(ic, chi, d);
            CHECK(dimension_oracle(fx.V, chi, d) == basis.dim());
            ++cells;
        }
    CHECK(cells == 63);
}

TEST_CASE("H27: degree-0 constants") {
    H27 fx;
    InvariantContext ic(fx.V);
    CHECK(dimension_oracle(fx.V, ic.trivial_character(), 0) == 1);
    CHECK(weight_space_basis(ic, ic.trivial_character(), 0).dim() == 1);
}

TEST_CASE("projector idempotence and equivariance on random inputs") {
    H27 fx;
    Scalar w = Scalar::zeta(3);
    Rng rng(17);
    std::vector<Character> chars;
    for (int i = 0; i < 3; ++i)
        chars.push_back(Character::validate_character(fx.G, {w.pow(i), I(1), I(1)}, "c" + std::to_string(i)));
    for (int it = 0; it < 100; ++it) {
        SparsePolynomial f(3);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> e{static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4)),
                               static_cast<int>(rng.below(4))};
            f.add_term(Monomial(e), I(rng.range(-2, 2)));
        }
        const Character& chi = chars[rng.below(chars.size())];
        auto p = project_weight(fx.V, f, chi);
        CHECK(project_weight(fx.V, p, chi) == p);
        int g = static_cast<int>(rng.below(27));
        Scalar expected = chi.value(fx.G.inverse(g));
        CHECK(fx.V.act(g, p) == p * expected);
    }
}

TEST_CASE("A4tilde: generator profile is {6,8,12} up to degree 12") {
    A4tilde fx;
    CHECK(fx.G.order() == 24);
    InvariantContext ic(fx.V);
    GeneratorProfile prof = generator_profile(ic, 12);
    std::map<int, int> expected{{6, 1}, {8, 1}, {12, 1}};
    CHECK(prof.counts == expected);
}

TEST_CASE("A4tilde: h12 identity and dimension facts") {
    A4tilde fx;
    auto ctx = fx.pctx();
    ctx.named["f1"] = parse_polynomial("(x1*x2)^2", ctx);
    ctx.named["f2"] = parse_polynomial("(x1^2+x2^2)^2", ctx);
    auto h6 = parse_polynomial("x1*x2*(x1^2+x2^2)*(x1^2-x2^2)", ctx);
    auto h12_1 = parse_polynomial("(4*f1)^2*f2 - 4*f1*f2^2", ctx);
    CHECK(h12_1 == -(h6 * h6) * I(4));

    InvariantContext ic(fx.V);
    CHECK(dimension_oracle(fx.V, ic.trivial_character(), 6) == 1);
    CHECK(dimension_oracle(fx.V, ic.trivial_character(), 10) == 0);
    auto b6 = weight_space_basis(ic, ic.trivial_character(), 6);
    REQUIRE(b6.dim() == 1);
    // the degree-6 line is spanned by h6
    auto mons = fx.V.monomials_of_total_degree(6);
    RowSpace span(mons.size());
    span.insert(b6.basis[0].coefficient_row(mons, I(0)));
    CHECK(span.contains(h6.coefficient_row(mons, I(0))));
}

TEST_CASE("t_chi is a relative invariant of weight chi") {
    H27 fx;
    Scalar w = Scalar::zeta(3);
    Character chi = Character::validate_character(fx.G, {w, I(1), I(1)}, "(w,1)");
    GModule U = GModule::build(fx.G, {}, {&chi});
    CHECK(U.var_names() == std::vector<std::string>{"t1"});
    SparsePolynomial t = SparsePolynomial::variable(1, 0, I(1));
    CHECK(is_relative_invariant(U, t, chi));
    CHECK(project_weight(U, t, chi) == t);
    // and it projects to zero in other weights
    Character chi2 = Character::validate_character(fx.G, {w * w, I(1), I(1)}, "(w2,1)");
    CHECK(project_weight(U, t, chi2).is_zero());
    // g . t = chi(g^-1) t
    int a = fx.G.generator_element(0);
    CHECK(U.act(a, t) == t * chi.value(fx.G.inverse(a)));
}

TEST_CASE("hilbert_complement at degree 0") {
    H27 fx;
    InvariantContext ic(fx.V);
    auto c = hilbert_complement(ic, ic.trivial_character(), 0);
    CHECK(c.dim() == 1);
    Scalar w = Scalar::zeta(3);
    Character chi = Character::validate_character(fx.G, {w, I(1), I(1)}, "(w,1)");
    CHECK(hilbert_complement(ic, chi, 0).dim() == 0);
}

TEST_CASE("serial and parallel monomial projection agree") {
    H27 fx;
    InvariantContext ic(fx.V);
    auto mons = fx.V.monomials_of_total_degree(5);
    auto a = project_monomials_serial(fx.V, ic.trivial_character(), mons);
    auto b = project_monomials_parallel(fx.V, ic.trivial_character(), mons);
    CHECK(a == b);
}
