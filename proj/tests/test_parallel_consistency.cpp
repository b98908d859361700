#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/catalog.hpp"
#include "invar/invariants.hpp"
#include "invar/separation.hpp"
#include "invar/zerosum.hpp"

using namespace invar;

// The OpenMP kernels must produce byte-identical results to the serial
// reference paths regardless of the worker count.

TEST_CASE("projection kernel: serial reference equals parallel") {
    Catalog cat;
    const CatalogEntry& e = cat.load_entry("27_4");
    GModule m = e.make_module({"W1", "W2"});
    InvariantContext ctx(m);
    for (int d : {3, 5}) {
        auto mons = m.monomials_of_total_degree(d);
        auto a = project_monomials_serial(m, e.trivial_char(), mons);
        auto b = project_monomials_parallel(m, e.trivial_char(), mons);
        CHECK(a == b);
    }
}

TEST_CASE("whole-pipeline results are identical under different job settings") {
    Catalog cat;
    const CatalogEntry& e = cat.load_entry("24_8");
    GModule m = e.make_module({"W", "U_(m1,m1)"});

    auto run_once = [&](int jobs) {
        int saved = config().jobs;
        config().jobs = jobs;
        InvariantContext ctx(m);
        GeneratorProfile prof = generator_profile(ctx, 9);
        auto v = e.parse_point({"1", "xi", "1"}, m);
        auto v2 = e.parse_point({"1", "xi", "-1"}, m);
        auto cert = make_certificate(ctx, e.id, {"W", "U_(m1,m1)"}, v, v2, 8, e.invariant("sep9").poly, "sep9");
        config().jobs = saved;
        return std::make_pair(prof.counts, certificate_to_json(cert));
    };

    auto serial = run_once(1);
    auto parallel = run_once(0);
    CHECK(serial.first == parallel.first);
    CHECK(serial.second == parallel.second);
}

TEST_CASE("davenport search is deterministic across job settings") {
    auto C33 = parse_abelian_spec("C3xC3");
    int saved = config().jobs;
    config().jobs = 1;
    auto a = davenport(C33);
    config().jobs = 0;
    auto b = davenport(C33);
    config().jobs = saved;
    CHECK(a.constant == b.constant);
    CHECK(a.witness == b.witness);
}
