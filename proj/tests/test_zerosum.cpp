#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/zerosum.hpp"

using namespace invar;

TEST_CASE("predicates on C3") {
    auto C3 = AbelianGroupTable::cyclic(3);
    CHECK(is_irreducible_product_one(C3, {1, 1, 1}));
    CHECK(is_irreducible_product_one(C3, {1, 2}));
    CHECK_FALSE(is_irreducible_product_one(C3, {1, 2, 1, 2}));
    CHECK(is_product_one_free(C3, {1}));
    CHECK_FALSE(is_product_one_free(C3, {1, 2}));
    CHECK_FALSE(is_product_one_free(C3, {1, 1, 1}));
}

TEST_CASE("davenport constants by enumeration") {
    CHECK(davenport(AbelianGroupTable::cyclic(1)).constant == 1);
    CHECK(davenport(AbelianGroupTable::cyclic(2)).constant == 2);
    CHECK(davenport(AbelianGroupTable::cyclic(3)).constant == 3);
    CHECK(davenport(AbelianGroupTable::cyclic(4)).constant == 4);
    CHECK(davenport(AbelianGroupTable::cyclic(5)).constant == 5);
    CHECK(davenport(AbelianGroupTable::cyclic(6)).constant == 6);
    CHECK(davenport(AbelianGroupTable::cyclic(9)).constant == 9);
    auto C3xC3 = AbelianGroupTable::direct_product(AbelianGroupTable::cyclic(3), AbelianGroupTable::cyclic(3));
    auto res = davenport(C3xC3);
    CHECK(res.constant == 5);
    CHECK(is_irreducible_product_one(C3xC3, res.witness));
    CHECK(res.witness.size() == 5);
}

TEST_CASE("C6: free sequences of length 5 exist, none of length 6") {
    auto C6 = AbelianGroupTable::cyclic(6);
    CHECK(is_product_one_free(C6, {1, 1, 1, 1, 1}));
    CHECK(davenport(C6).constant == 6);
}

TEST_CASE("monotonicity over subgroup lattices") {
    auto C6 = AbelianGroupTable::cyclic(6);
    int d6 = davenport(C6).constant;
    for (const auto& gens : std::vector<std::vector<int>>{{0}, {3}, {2}, {1}}) {
        auto sub = C6.subgroup_table(gens);
        CHECK(davenport(sub).constant <= d6);
    }
    auto C3xC3 = AbelianGroupTable::direct_product(AbelianGroupTable::cyclic(3), AbelianGroupTable::cyclic(3));
    int d33 = davenport(C3xC3).constant;
    for (const auto& gens : std::vector<std::vector<int>>{{0}, {1}, {3}, {4}}) {
        auto sub = C3xC3.subgroup_table(gens);
        CHECK(davenport(sub).constant <= d33);
    }
}

TEST_CASE("guards") {
    auto C3 = AbelianGroupTable::cyclic(3);
    std::vector<int> too_long(25, 1);
    CHECK_THROWS_AS(is_product_one_free(C3, too_long), Error);
    CHECK_THROWS_AS(davenport(AbelianGroupTable::cyclic(65)), Error);
}

TEST_CASE("abelian spec parsing") {
    CHECK(parse_abelian_spec("C6").n == 6);
    CHECK(parse_abelian_spec("C3xC3").n == 9);
    CHECK(parse_abelian_spec("C1").n == 1);
    CHECK_THROWS_AS(parse_abelian_spec("D8"), Error);
}
