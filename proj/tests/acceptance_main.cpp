// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "invar/checks.hpp"
#include "invar/separation.hpp"
#include "invar/zerosum.hpp"

using namespace invar;

namespace {

struct Criterion {
    std::string name;
    bool pass = true;
    std::string detail;
    double seconds = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Scalar I(long long v) { return Scalar::integer(v); }

std::vector<Scalar> random_point(const GModule& m, Rng& rng) {
    std::vector<Scalar> v;
    for (int i = 0; i < m.dim(); ++i) v.push_back(m.to_field(I(rng.range(-2, 2))));
    return v;
}

// criterion 8 second half: the stabilizer criterion's provable direction on
// sampled points across all catalog modules and weights
int forward_direction_sweep(const Catalog& cat, bool& ok, std::string& detail) {
    int pairs = 0;
    for (const auto& id : cat.entry_ids()) {
        const CatalogEntry& e = cat.load_entry(id);
        if (e.oracle_modules.empty()) continue;
        GModule m = e.make_module(e.oracle_modules.front());
        InvariantContext ctx(m);
        Rng rng(0xf0f0 + static_cast<unsigned>(pairs));
        std::vector<std::vector<Scalar>> pts;
        pts.push_back(std::vector<Scalar>(m.dim(), m.field_zero()));
        for (int i = 0; i < 8; ++i) pts.push_back(random_point(m, rng));
        for (const auto& chi : e.characters) {
            auto rep = zero_locus_check(ctx, chi, 3, pts);
            if (rep.forward_violations != 0) {
                ok = false;
                detail = "forward violation in " + id + " weight " + chi.label();
                return pairs;
            }
            pairs += static_cast<int>(pts.size());
        }
    }
    return pairs;
}

// criterion 9: randomized property suites + byte-identical reruns
int property_suite(const Catalog& cat, bool& ok, std::string& detail) {
    int cases = 0;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
        ++cases;
    };

    {
        const CatalogEntry& e = cat.load_entry("27_3");
        GModule m = e.make_module({"W"});
        InvariantContext ctx(m);
        Rng rng(0xabc1);
        // projector idempotence + equivariance
        for (int it = 0; it < 200; ++it) {
            SparsePolynomial f(m.dim());
            for (int t = 0; t < 3; ++t) {
                std::vector<int> ex{static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4)),
                                    static_cast<int>(rng.below(4))};
                f.add_term(Monomial(ex), I(rng.range(-2, 2)));
            }
            const Character& chi = e.characters[rng.below(e.characters.size())];
            auto p = project_weight(m, f, chi);
            expect(project_weight(m, p, chi) == p, "projector not idempotent");
            int g = static_cast<int>(rng.below(m.group().order()));
            expect(m.act(g, p) == p * m.to_field(chi.value(m.group().inverse(g))), "projector not equivariant");
        }
    }
    {
        const CatalogEntry& e = cat.load_entry("18_3");
        GModule m = e.make_module({"W1", "W2", "W3"});
        Rng rng(0xabc2);
        // action axioms
        for (int it = 0; it < 260; ++it) {
            SparsePolynomial f(m.dim());
            for (int t = 0; t < 3; ++t) {
                std::vector<int> ex(m.dim(), 0);
                ex[rng.below(m.dim())] = 1 + static_cast<int>(rng.below(2));
                ex[rng.below(m.dim())] += static_cast<int>(rng.below(2));
                f.add_term(Monomial(ex), I(rng.range(-2, 2)));
            }
            int g = static_cast<int>(rng.below(m.group().order()));
            int h = static_cast<int>(rng.below(m.group().order()));
            expect(m.act(g, m.act(h, f)) == m.act(m.group().multiply(g, h), f), "action not compatible with products");
            auto v = random_point(m, rng);
            expect(m.evaluate(m.act(g, f), v) == m.evaluate(f, m.apply_element(m.group().inverse(g), v)),
                   "evaluate/act compatibility");
        }
    }
    {
        // orbit-stabilizer counting over several catalog modules
        for (const std::string& id : {"18_4", "24_13", "27_4", "24_12"}) {
            const CatalogEntry& e = cat.load_entry(id);
            GModule m = e.make_module(e.oracle_modules.front());
            Rng rng(0xabc3);
            for (int it = 0; it < 50; ++it) {
                auto v = random_point(m, rng);
                auto orb = orbit(m, v);
                auto stab = m.stabilizer(v);
                expect(orb.size() * stab.size() == static_cast<size_t>(m.group().order()), "orbit-stabilizer count");
            }
        }
    }
    {
        // orbit equality is an equivalence relation on random triples
        const CatalogEntry& e = cat.load_entry("24_8");
        GModule m = e.make_module({"W", "U_(m1,m1)"});
        Rng rng(0xabc4);
        for (int it = 0; it < 50; ++it) {
            auto v = random_point(m, rng);
            auto orb = orbit(m, v);
            auto w = orb[rng.below(orb.size())];
            auto u = orb[rng.below(orb.size())];
            expect(orbits_equal(m, v, v) && orbits_equal(m, v, w) && orbits_equal(m, w, u), "orbit equivalence");
        }
    }
    {
        // determinism: byte-identical reruns of a report and a certificate
        auto r1 = report_to_json_text(run_theorem_check(cat, "prop-h27"));
        auto r2 = report_to_json_text(run_theorem_check(cat, "prop-h27"));
        expect(r1 == r2, "theorem-check report not byte-identical across reruns");
        const CatalogEntry& e = cat.load_entry("27_3");
        GModule m = e.make_module({"W"});
        InvariantContext ctx1(m), ctx2(m);
        auto v = e.parse_point({"1", "2", "0"}, m);
        auto v2 = e.parse_point({"2", "1", "0"}, m);
        auto c1 = certificate_to_json(make_certificate(ctx1, "27_3", {"W"}, v, v2, 8, e.invariant("f4").poly, "f4"));
        auto c2 = certificate_to_json(make_certificate(ctx2, "27_3", {"W"}, v, v2, 8, e.invariant("f4").poly, "f4"));
        expect(c1 == c2, "certificate emission not byte-identical");
        auto back = certificate_from_json(c1, m);
        expect(certificate_to_json(back) == c1, "certificate round-trip not byte-identical");
    }
    {
        // Davenport witnesses verify, and the subgroup monotonicity samples hold
        for (const std::string spec : {"C3", "C4", "C6", "C9", "C3xC3"}) {
            auto tab = parse_abelian_spec(spec);
            auto res = davenport(tab);
            expect(is_irreducible_product_one(tab, res.witness), "davenport witness fails irreducibility");
        }
        auto C6 = parse_abelian_spec("C6");
        auto C33 = parse_abelian_spec("C3xC3");
        for (const auto& gens : std::vector<std::vector<int>>{{1}, {2}, {3}})
            expect(davenport(C6.subgroup_table(gens)).constant <= 6, "subgroup monotonicity (C6)");
        for (const auto& gens : std::vector<std::vector<int>>{{1}, {3}, {4}})
            expect(davenport(C33.subgroup_table(gens)).constant <= 5, "subgroup monotonicity (C3xC3)");
    }
    return cases;
}

} // namespace

int main(int argc, char** argv) {
    std::string catalog_dir = Catalog::default_directory();
    if (argc > 1) catalog_dir = argv[1];
    Catalog cat(catalog_dir);

    std::map<std::string, CheckReport> reports;
    auto run = [&](const std::string& id) -> const CheckReport& {
        auto it = reports.find(id);
        if (it == reports.end()) it = reports.emplace(id, run_theorem_check(cat, id)).first;
        return it->second;
    };

    std::vector<Criterion> criteria;
    auto add_criterion = [&](const std::string& name, const std::vector<std::string>& check_ids,
                             const std::string& extra = "") {
        Criterion c;
        c.name = name;
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream det;
        for (const auto& id : check_ids) {
            const CheckReport& rep = run(id);
            if (!rep.passed()) {
                c.pass = false;
                for (const auto& s : rep.steps)
                    if (!s.pass && !s.skipped) det << id << ": " << s.name << " (" << s.detail << "); ";
            }
        }
        c.seconds = seconds_since(t0);
        c.detail = c.pass ? extra : det.str();
        criteria.push_back(c);
    };

    try {
        add_criterion("criterion-1 witness-certificates",
                      {"thm-c3xc3-c2", "thm-a4tilde", "thm-c6xc2-c2", "thm-s4", "prop-h27", "thm-m27",
                       "thm-dic12xc2"},
                      "7 theorem witnesses verified end-to-end");
        add_criterion("criterion-2 generator-profiles",
                      {"thm-a4tilde", "thm-c6xc2-c2", "prop-c5c4-mingen", "thm-s4", "prop-a4xc2", "prop-m27-mingen"},
                      "profiles match to the stated caps");
        add_criterion("criterion-3 dimension-oracle", {"oracle-agreement"}, "oracle equals constructed dimensions");
        add_criterion("criterion-4 finite-field", {"prop-h27-gf4", "thm-s4"},
                      "GF(4) exhaustive separation and the GF(25) witness");
        add_criterion("criterion-5 davenport", {"davenport-suite"}, "D(C3)=3 D(C4)=4 D(C6)=6 D(C3xC3)=5");
        add_criterion("criterion-6 stabilizer-tables", {"lemma-a4xc2-stab", "lemma-m27-stab", "thm-s3xc3"},
                      "case lists plus randomized points");
        add_criterion("criterion-7 identity-suite", {"thm-a4tilde", "thm-c5c4", "thm-s3xc3", "thm-c6xc2-c2"},
                      "all exact polynomial identities hold");

        {
            Criterion c;
            c.name = "criterion-8 zero-locus";
            auto t0 = std::chrono::steady_clock::now();
            const CheckReport& rep = run("lemma-m27-zerolocus");
            bool ok = rep.passed();
            std::string detail;
            int pairs = forward_direction_sweep(cat, ok, detail);
            c.pass = ok;
            c.detail = ok ? ("sampled locus checks plus " + std::to_string(pairs) + " forward-direction pairs")
                          : detail;
            c.seconds = seconds_since(t0);
            criteria.push_back(c);
        }
        {
            Criterion c;
            c.name = "criterion-9 property-suites";
            auto t0 = std::chrono::steady_clock::now();
            bool ok = true;
            std::string detail;
            int cases = property_suite(cat, ok, detail);
            c.pass = ok && cases >= 1000;
            c.detail = c.pass ? (std::to_string(cases) + " randomized cases, byte-identical reruns")
                              : (detail.empty() ? "fewer than 1000 cases" : detail);
            c.seconds = seconds_since(t0);
            criteria.push_back(c);
        }
    } catch (const Error& e) {
        std::cerr << "acceptance aborted [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    }

    bool all_pass = true;
    for (const auto& c : criteria) {
        std::ostringstream line;
        line << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.seconds << "s)";
        if (!c.detail.empty()) line << " - " << c.detail;
        std::cout << line.str() << "\n";
        all_pass = all_pass && c.pass;
    }
    std::cout << (all_pass ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES above") << "\n";
    return all_pass ? 0 : 1;
}
