// Times the OpenMP kernels against their serial reference paths.

#include <chrono>
#include <functional>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "invar/catalog.hpp"
#include "invar/separation.hpp"
#include "invar/zerosum.hpp"

using namespace invar;

namespace {

double time_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
    std::cout << name << ": serial " << serial << "s, parallel " << parallel << "s, speedup "
              << (parallel > 0 ? serial / parallel : 0) << "x\n";
}

} // namespace

int main(int argc, char** argv) {
    std::string catalog_dir = Catalog::default_directory();
    if (argc > 1) catalog_dir = argv[1];
    Catalog cat(catalog_dir);
#ifdef _OPENMP
    std::cout << "threads available: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run the serial path\n";
#endif

    {
        const CatalogEntry& e = cat.load_entry("27_4");
        GModule m = e.make_module({"W1", "W2"});
        auto mons = m.monomials_of_total_degree(8);
        std::vector<SparsePolynomial> a, b;
        double ts = time_of([&] { a = project_monomials_serial(m, e.trivial_char(), mons); });
        double tp = time_of([&] { b = project_monomials_parallel(m, e.trivial_char(), mons); });
        row("weight projection (M27 W1+W2, degree 8, " + std::to_string(mons.size()) + " monomials)", ts, tp);
        if (a != b) {
            std::cerr << "kernel mismatch!\n";
            return 1;
        }
    }
    {
        const CatalogEntry& e = cat.load_entry("27_3");
        GModule m = e.make_module({"W"}).reduce_to_field(gf_field(2, 2));
        FiniteFieldBetaSep r1, r2;
        config().jobs = 1;
        double ts = time_of([&] { r1 = finite_field_beta_sep(m, 6); });
        config().jobs = 0;
        double tp = time_of([&] { r2 = finite_field_beta_sep(m, 6); });
        row("finite-field separation sweep (H27 over GF(4))", ts, tp);
        if (r1.value != r2.value) {
            std::cerr << "kernel mismatch!\n";
            return 1;
        }
    }
    {
        auto tab = parse_abelian_spec("C3xC3xC2");
        DavenportResult r1, r2;
        config().jobs = 1;
        double ts = time_of([&] { r1 = davenport(tab); });
        config().jobs = 0;
        double tp = time_of([&] { r2 = davenport(tab); });
        row("davenport enumeration (C3xC3xC2)", ts, tp);
        if (r1.constant != r2.constant) {
            std::cerr << "kernel mismatch!\n";
            return 1;
        }
    }
    {
        const CatalogEntry& e = cat.load_entry("20_3");
        GModule m = e.make_module({"W"});
        GeneratorProfile p1, p2;
        config().jobs = 1;
        double ts = time_of([&] {
            InvariantContext ctx(m);
            p1 = generator_profile(ctx, 8);
        });
        config().jobs = 0;
        double tp = time_of([&] {
            InvariantContext ctx(m);
            p2 = generator_profile(ctx, 8);
        });
        row("generator profile (C5:C4 on W, cap 8)", ts, tp);
        if (p1.counts != p2.counts) {
            std::cerr << "kernel mismatch!\n";
            return 1;
        }
    }
    return 0;
}
