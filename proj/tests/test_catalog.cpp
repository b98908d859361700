#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/catalog.hpp"
#include "invar/checks.hpp"
#include "invar/separation.hpp"

using namespace invar;

TEST_CASE("all catalog entries load and validate") {
    Catalog cat;
    auto ids = cat.entry_ids();
    std::vector<std::string> expected{"18_3", "18_4", "20_3", "24_12", "24_13", "24_3", "24_7", "24_8", "27_3", "27_4"};
    CHECK(ids == expected);
    for (const auto& id : ids) {
        const CatalogEntry& e = cat.load_entry(id);
        CHECK(e.group().order() == e.order);
        CHECK(!e.characters.empty());
    }
    CHECK_THROWS_AS(cat.load_entry("99_1"), Error);
}

TEST_CASE("orders match the GAP ids") {
    Catalog cat;
    for (const auto& id : cat.entry_ids()) {
        const CatalogEntry& e = cat.load_entry(id);
        CHECK(e.gap[0] == e.group().order());
    }
}

TEST_CASE("element orders from the presentations") {
    Catalog cat;
    const CatalogEntry& m27 = cat.load_entry("27_4");
    CHECK(m27.group().element_order(parse_group_word("a", m27.group())) == 9);
    CHECK(m27.group().element_order(parse_group_word("b", m27.group())) == 3);
    const CatalogEntry& s4 = cat.load_entry("24_12");
    CHECK(s4.group().element_order(parse_group_word("s*t", s4.group())) == 3);
}

TEST_CASE("kernels of the S3xC3 quotient structure") {
    Catalog cat;
    const CatalogEntry& e = cat.load_entry("18_3");
    GModule W1 = e.make_module({"W1"});
    auto ker = W1.summand_kernel(0);
    CHECK(ker.size() == 3); // <c>, so G/ker is S3
    // the C6 quotient used for the lower bound: a character of order 6 exists
    CHECK(e.character("(-1,w)").order() == 6);
}

TEST_CASE("kernels of the 18_4 representations") {
    Catalog cat;
    const CatalogEntry& e = cat.load_entry("18_4");
    GModule W1 = e.make_module({"W1"});
    GModule W2 = e.make_module({"W2"});
    auto k1 = W1.summand_kernel(0);
    auto k2 = W2.summand_kernel(0);
    CHECK(k1.size() == 3); // <b>
    CHECK(k2.size() == 3); // <a>
    CHECK(k1 == e.group().subgroup_generated({parse_group_word("b", e.group())}));
    CHECK(k2 == e.group().subgroup_generated({parse_group_word("a", e.group())}));
}

TEST_CASE("U expands to the full character list") {
    Catalog cat;
    const CatalogEntry& e = cat.load_entry("24_13");
    GModule m = e.make_module({"W2", "U"});
    CHECK(m.dim() == 9);
    CHECK(m.summand_count() == 7);
}

TEST_CASE("named invariants parse and pass the weight check at load") {
    Catalog cat;
    const CatalogEntry& e = cat.load_entry("27_4");
    CHECK(e.invariant("f1e4").poly.degree() == 9);
    CHECK(e.invariant("sep10").poly.degree() == 10);
    CHECK_THROWS_AS(e.invariant("nope"), Error);
}

TEST_CASE("table 1 has all rows") {
    Catalog cat;
    auto rows = cat.table1();
    CHECK(rows.size() == 36);
    bool found = false;
    for (const auto& r : rows)
        if (r.gap == "(24,3)") {
            found = true;
            CHECK(r.beta == "12");
            CHECK(r.beta_sep == "12");
        }
    CHECK(found);
}

TEST_CASE("automorphism examples from the catalog groups") {
    Catalog cat;
    // M27: a -> a^2, b -> b extends to an automorphism; a^3 -> a^6
    const CatalogEntry& m27 = cat.load_entry("27_4");
    const FiniteGroup& G = m27.group();
    auto alpha = Automorphism::from_generator_images(
        G, {parse_group_word("a^2", G), parse_group_word("b", G)});
    CHECK(alpha.apply(parse_group_word("a^3", G)) == parse_group_word("a^6", G));

    // S3xC3: a -> a, b -> b, c -> c^2; ac -> ac^2
    const CatalogEntry& s3 = cat.load_entry("18_3");
    const FiniteGroup& H = s3.group();
    auto beta = Automorphism::from_generator_images(
        H, {parse_group_word("a", H), parse_group_word("b", H), parse_group_word("c^2", H)});
    CHECK(beta.apply(parse_group_word("a*c", H)) == parse_group_word("a*c^2", H));
}
