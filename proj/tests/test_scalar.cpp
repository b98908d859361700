#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/scalar.hpp"

using namespace invar;

TEST_CASE("roots of unity satisfy the defining property for all catalog conductors") {
    for (int n : {3, 4, 6, 8, 9, 12, 20}) {
        Scalar z = Scalar::zeta(n);
        CHECK(z.pow(n).is_one());
        std::set<std::string> powers;
        Scalar acc = Scalar::integer(1);
        for (int j = 0; j < n; ++j) {
            powers.insert(acc.to_string());
            CHECK((j == 0) == acc.is_one());
            acc = acc * z;
        }
        CHECK(powers.size() == static_cast<size_t>(n));
        CHECK(z.multiplicative_order() == n);
    }
}

TEST_CASE("zeta12 basics") {
    Scalar z = Scalar::zeta(12);
    CHECK(z.pow(12).is_one());
    CHECK(z.pow(6) == Scalar::integer(-1));
}

TEST_CASE("zeta6 + inverse is 1") {
    Scalar z = Scalar::zeta(6);
    CHECK(z + z.inverse() == Scalar::integer(1));
}

TEST_CASE("zeta9 exponent arithmetic") {
    Scalar z = Scalar::zeta(9);
    CHECK(z.pow(4) * z.pow(7) == z.pow(2));
}

TEST_CASE("embed is the canonical inclusion") {
    CycRat z3 = CycRat::zeta(3);
    CycRat in9 = embed(z3, 9);
    CHECK(in9 == CycRat::zeta(9).pow(3));
    CHECK(embed(CycRat::from_int(1), 8) == CycRat::from_int(1));
    CycRat z4in20 = embed(CycRat::zeta(4), 20);
    CHECK(z4in20 == CycRat::zeta(20).pow(5));
    CHECK(z4in20 * z4in20 == CycRat::from_int(-1));
    CHECK_THROWS_AS(embed(CycRat::zeta(8), 20), Error); // 8 does not divide 20
}

TEST_CASE("embed is a ring homomorphism on random pairs") {
    Rng rng(42);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 9}, {4, 12}, {6, 12}, {4, 20}}) {
        for (int it = 0; it < 100; ++it) {
            std::vector<Rat> a(euler_phi(m)), b(euler_phi(m));
            for (auto& c : a) c = Rat(rng.range(-3, 3));
            for (auto& c : b) c = Rat(rng.range(-3, 3));
            CycRat x(m, a), y(m, b);
            CHECK(embed(x * y, n) == embed(x, n) * embed(y, n));
            CHECK(embed(x + y, n) == embed(x, n) + embed(y, n));
        }
    }
}

TEST_CASE("field axiom fuzzing over Q(zeta_12)") {
    Rng rng(7);
    for (int it = 0; it < 1000; ++it) {
        std::vector<Rat> ca(4), cb(4), cc(4);
        for (auto& c : ca) c = Rat(rng.range(-2, 2));
        for (auto& c : cb) c = Rat(rng.range(-2, 2));
        for (auto& c : cc) c = Rat(rng.range(-2, 2));
        Scalar a{CycRat(12, ca)}, b{CycRat(12, cb)}, c{CycRat(12, cc)};
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("cyclotomic inverse") {
    Rng rng(13);
    for (int it = 0; it < 50; ++it) {
        std::vector<Rat> ca(euler_phi(9));
        for (auto& c : ca) c = Rat(rng.range(-3, 3));
        Scalar a{CycRat(9, ca)};
        if (a.is_zero()) continue;
        CHECK((a * a.inverse()).is_one());
    }
    CHECK_THROWS_AS(Scalar::integer(0).inverse(), Error);
}

TEST_CASE("mixed conductors unify via lcm") {
    Scalar a = Scalar::zeta(4);
    Scalar b = Scalar::zeta(6);
    Scalar p = a * b;
    CHECK(p.multiplicative_order() == 12);
    CHECK(p.pow(12).is_one());
}

TEST_CASE("GF(q) exhaustive multiplicative group") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {5, 1}, {5, 2}}) {
        const GFTable* F = gf_field(p, k);
        int q = F->q();
        for (int x = 1; x < q; ++x) CHECK(F->pow(x, q - 1) == 1);
        // exp/log mutually inverse
        for (int x = 1; x < q; ++x) CHECK(F->pow(F->generator(), F->log(x)) == x);
    }
}

TEST_CASE("GF root_of_unity is deterministic and has exact order") {
    const GFTable* F4 = gf_field(2, 2);
    Scalar w = root_of_unity_gf(F4, 3);
    CHECK(w.multiplicative_order() == 3);
    CHECK_FALSE(w.is_one());

    const GFTable* F5 = gf_field(5, 1);
    Scalar r = root_of_unity_gf(F5, 4);
    CHECK(r == Scalar::gf(F5, 2)); // smallest generator of GF(5)^x is 2
    CHECK(r.multiplicative_order() == 4);
    CHECK_THROWS_AS(root_of_unity_gf(F5, 3), Error); // 3 does not divide 4
}

TEST_CASE("inv(27) in GF(4) is 1") {
    const GFTable* F4 = gf_field(2, 2);
    Scalar s = Scalar::gf(F4, F4->from_int(27));
    CHECK(s.inverse().is_one());
}

TEST_CASE("reduction to GF carries zeta_3 to an order-3 element") {
    const GFTable* F4 = gf_field(2, 2);
    GFElem e = reduce_to_gf(CycRat::zeta(3), F4);
    CHECK(Scalar(e).multiplicative_order() == 3);
    // ring homomorphism spot check: z3^2 + z3 + 1 = 0
    CycRat z = CycRat::zeta(3);
    GFElem lhs = reduce_to_gf(z * z + z + CycRat::from_int(1), F4);
    CHECK(lhs.value == 0);
}

TEST_CASE("scalar serialization strings") {
    CHECK(Scalar::integer(-3).to_string() == "-3");
    CHECK(Scalar::rational(Rat(2, 3)).to_string() == "2/3");
    CHECK(Scalar::zeta(8).to_string() == "z8");
}
