#include "invar/checks.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "invar/separation.hpp"
#include "invar/zerosum.hpp"

namespace invar {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

std::vector<std::string> labels_of(const json& j) { return j.get<std::vector<std::string>>(); }

// random coordinate scalars: small integers, occasionally scaled by an entry constant
Scalar random_coord(const GModule& m, const CatalogEntry& e, Rng& rng) {
    long long base = rng.range(-2, 2);
    Scalar s = m.to_field(Scalar::integer(base));
    if (!e.constants.empty() && rng.below(4) == 0 && base != 0) {
        auto it = e.constants.begin();
        std::advance(it, rng.below(e.constants.size()));
        s = s * m.to_field(it->second);
    }
    return s;
}

std::vector<Scalar> random_point(const GModule& m, const CatalogEntry& e, Rng& rng, bool nonzero) {
    while (true) {
        std::vector<Scalar> v;
        for (int i = 0; i < m.dim(); ++i) v.push_back(random_coord(m, e, rng));
        if (!nonzero) return v;
        for (const auto& s : v)
            if (!s.is_zero()) return v;
    }
}

Scalar random_nonzero_scale(const GModule& m, const CatalogEntry& e, Rng& rng) {
    for (;;) {
        Scalar s = random_coord(m, e, rng);
        if (!s.is_zero()) return s;
    }
}

// --- stabilizer classifiers -------------------------------------------------

// nonzero v in W1 of A4xC2: 3 if x1^2=x2^2=x3^2; 2 if exactly one zero
// coordinate; 4 if exactly one nonzero coordinate; else 1
size_t a4xc2_expected_order(const GModule& m, const std::vector<Scalar>& v) {
    int zeros = 0;
    for (const auto& s : v) zeros += s.is_zero();
    if (zeros == 3) return m.group().order();
    Scalar a = v[0] * v[0], b = v[1] * v[1], c = v[2] * v[2];
    if (a == b && b == c) return 3;
    if (zeros == 1) return 2;
    if (zeros == 2) return 4;
    return 1;
}

bool on_line(const std::vector<Scalar>& v, const std::vector<Scalar>& dir) {
    // v nonzero and proportional to dir
    bool nz = false;
    for (const auto& s : v) nz = nz || !s.is_zero();
    if (!nz) return false;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] * dir[j] != v[j] * dir[i]) return false;
    return true;
}

// expected stabilizer (as sorted element list) of v in a M27 module [W1],
// [W2], or [W1,W2]; per-part line classification intersected
std::vector<int> m27_expected_stab(const GModule& m, const CatalogEntry& e, const std::vector<Scalar>& v) {
    const FiniteGroup& G = m.group();
    Scalar one = m.field_one();
    Scalar eps = m.to_field(e.constants.at("eps"));
    Scalar eps2 = eps * eps;
    auto whole = [&]() {
        std::vector<int> all(G.order());
        for (int g = 0; g < G.order(); ++g) all[g] = g;
        return all;
    };
    std::vector<int> acc = whole();
    auto intersect = [&](const std::vector<int>& s) {
        std::vector<int> out;
        std::set<int> in(s.begin(), s.end());
        for (int g : acc)
            if (in.count(g)) out.push_back(g);
        acc = out;
    };
    int offset = 0;
    for (int si = 0; si < m.summand_count(); ++si) {
        const auto& sm = m.summand(si);
        std::vector<Scalar> part(v.begin() + offset, v.begin() + offset + sm.dim);
        offset += sm.dim;
        bool zero = true;
        for (const auto& s : part) zero = zero && s.is_zero();
        if (zero) continue;
        bool w1 = sm.label == "W1";
        std::vector<int> sub;
        if (on_line(part, {one, one, one}))
            sub = G.subgroup_generated({parse_group_word("b", G)});
        else if (on_line(part, {eps2, eps, one}))
            sub = G.subgroup_generated({parse_group_word(w1 ? "a^3*b" : "a^6*b", G)});
        else if (on_line(part, {eps, eps2, one}))
            sub = G.subgroup_generated({parse_group_word(w1 ? "a^6*b" : "a^3*b", G)});
        else
            sub = {0};
        intersect(sub);
    }
    return acc;
}

// S3xC3 lemma: W1 has <c> inside every stabilizer; order 6 iff x1^3 = x2^3.
// W2/W3: order 3 iff y1 y2 = 0; order 2 iff y1^3 = y2^3; else trivial.
size_t s3xc3_expected_order(const std::string& which, const std::vector<Scalar>& v) {
    bool zero = v[0].is_zero() && v[1].is_zero();
    Scalar c0 = v[0] * v[0] * v[0], c1 = v[1] * v[1] * v[1];
    if (which == "W1") {
        if (zero) return 18;
        return c0 == c1 ? 6 : 3;
    }
    if (zero) return 18;
    if ((v[0] * v[1]).is_zero()) return 3;
    if (c0 == c1) return 2;
    return 1;
}

struct StepRunner {
    const Catalog& cat;
    const CatalogEntry* entry = nullptr;
    CheckReport& rep;

    void add(const std::string& name, bool pass, const std::string& detail = "", bool skipped = false) {
        rep.steps.push_back(SubCheck{name, pass, skipped, detail});
    }

    const CatalogEntry& E() const {
        if (!entry) fail(ErrorCode::ValidationFailure, "check step needs a group entry");
        return *entry;
    }

    GModule module_for(const json& step) const {
        auto m = E().make_module(labels_of(step.at("module")));
        if (step.contains("field")) {
            std::string f = step.at("field").get<std::string>();
            if (f.rfind("gf:", 0) != 0) fail(ErrorCode::ParseError, "field must be 'gf:<q>'");
            int q = std::stoi(f.substr(3));
            int p = 2;
            while (q % p != 0) ++p;
            int k = 0;
            int t = q;
            while (t > 1) {
                if (t % p != 0) fail(ErrorCode::ParseError, "field size is not a prime power");
                t /= p;
                ++k;
            }
            return m.reduce_to_field(gf_field(p, k));
        }
        return m;
    }

    void run(const json& step);

    void op_certificate(const json& s);
    void op_orbits_equal(const json& s);
    void op_profile(const json& s);
    void op_identity(const json& s);
    void op_invariant_dim(const json& s);
    void op_stabilizer_cases(const json& s);
    void op_zero_locus_nonvanish(const json& s);
    void op_zero_locus_forward(const json& s);
    void op_davenport(const json& s);
    void op_ffbeta(const json& s);
    void op_ff_pair(const json& s);
    void op_s4_char5_witness(const json& s);
    void op_assemble(const json& s);
    void op_hilbert_complement(const json& s);
    void op_twist_trace_equal(const json& s);
    void op_element_order(const json& s);
    void op_rep_kernel_order(const json& s);
    void op_character_order(const json& s);
    void op_orbit_sample_consistency(const json& s);
    void op_act_example(const json& s);
    void op_evaluate_example(const json& s);
    void op_oracle_sweep(const json& s);
};

void StepRunner::run(const json& step) {
    std::string op = step.at("op").get<std::string>();
    bool best_effort = step.value("best_effort", false);
    size_t before = rep.steps.size();
    try {
        if (op == "certificate")
            op_certificate(step);
        else if (op == "orbits_equal")
            op_orbits_equal(step);
        else if (op == "profile")
            op_profile(step);
        else if (op == "identity")
            op_identity(step);
        else if (op == "invariant_dim")
            op_invariant_dim(step);
        else if (op == "stabilizer_cases")
            op_stabilizer_cases(step);
        else if (op == "zero_locus_nonvanish")
            op_zero_locus_nonvanish(step);
        else if (op == "zero_locus_forward")
            op_zero_locus_forward(step);
        else if (op == "davenport")
            op_davenport(step);
        else if (op == "ffbeta")
            op_ffbeta(step);
        else if (op == "ff_pair")
            op_ff_pair(step);
        else if (op == "s4_char5_witness")
            op_s4_char5_witness(step);
        else if (op == "assemble")
            op_assemble(step);
        else if (op == "hilbert_complement")
            op_hilbert_complement(step);
        else if (op == "twist_trace_equal")
            op_twist_trace_equal(step);
        else if (op == "element_order")
            op_element_order(step);
        else if (op == "rep_kernel_order")
            op_rep_kernel_order(step);
        else if (op == "character_order")
            op_character_order(step);
        else if (op == "orbit_sample_consistency")
            op_orbit_sample_consistency(step);
        else if (op == "act_example")
            op_act_example(step);
        else if (op == "evaluate_example")
            op_evaluate_example(step);
        else if (op == "oracle_sweep")
            op_oracle_sweep(step);
        else
            fail(ErrorCode::ParseError, "unknown check op '" + op + "'");
    } catch (const Error& e) {
        rep.steps.resize(before);
        if (best_effort && (e.code() == ErrorCode::SizeGuardExceeded || e.code() == ErrorCode::SizeGuard)) {
            add(op + " [best-effort]", true, std::string("skipped: ") + e.what(), true);
            return;
        }
        add(op, false, std::string(error_code_name(e.code())) + ": " + e.what());
    }
}

void StepRunner::op_certificate(const json& s) {
    auto labels = labels_of(s.at("module"));
    GModule m = module_for(s);
    InvariantContext ctx(m);
    auto v = E().parse_point(s.at("v").get<std::vector<std::string>>(), m);
    auto v2 = E().parse_point(s.at("v2").get<std::vector<std::string>>(), m);
    int bound = s.at("agree_bound").get<int>();
    std::string sep_name = s.at("separator").get<std::string>();
    const auto& inv = E().invariant(sep_name);
    if (E().expand_labels(inv.ambient) != E().expand_labels(labels))
        fail(ErrorCode::ValidationFailure, "separator ambient differs from the certificate module");
    auto cert = make_certificate(ctx, E().id, labels, v, v2, bound, inv.poly, sep_name);
    verify_certificate(ctx, cert);
    ParseContext sctx;
    sctx.constants = E().constants;
    Scalar ev = m.to_field(parse_scalar(s.at("values").at(0).get<std::string>(), sctx));
    Scalar ev2 = m.to_field(parse_scalar(s.at("values").at(1).get<std::string>(), sctx));
    if (cert.value_v != ev || cert.value_v2 != ev2)
        fail(ErrorCode::CheckFailure, "separator values " + cert.value_v.to_string() + ", " + cert.value_v2.to_string() +
                                          " differ from the stated " + ev.to_string() + ", " + ev2.to_string());
    std::ostringstream os;
    os << "agree<=" << bound << ", " << sep_name << " separates with values " << cert.value_v.to_string() << " vs "
       << cert.value_v2.to_string();
    add("certificate " + E().id + " [" + sep_name + "]", true, os.str());
}

void StepRunner::op_orbits_equal(const json& s) {
    GModule m = module_for(s);
    auto v = E().parse_point(s.at("v").get<std::vector<std::string>>(), m);
    auto v2 = E().parse_point(s.at("v2").get<std::vector<std::string>>(), m);
    bool expect = s.at("expect").get<bool>();
    bool got = orbits_equal(m, v, v2);
    if (got != expect) fail(ErrorCode::CheckFailure, "orbit equality mismatch");
    if (s.contains("via")) {
        int g = parse_group_word(s.at("via").get<std::string>(), m.group());
        if (m.apply_element(g, v) != v2) fail(ErrorCode::CheckFailure, "stated mapping element does not map v to v2");
    }
    add("orbits_equal " + m.label(), true, expect ? "same orbit" : "distinct orbits");
}

void StepRunner::op_profile(const json& s) {
    GModule m = module_for(s);
    InvariantContext ctx(m);
    int cap = s.at("cap").get<int>();
    GeneratorProfile prof = generator_profile(ctx, cap);
    std::ostringstream os;
    for (const auto& [d, c] : prof.counts) os << d << ":" << c << " ";
    if (s.contains("expect")) {
        std::map<int, int> expect;
        for (const auto& [k, val] : s.at("expect").items()) expect[std::stoi(k)] = val.get<int>();
        if (prof.counts != expect)
            fail(ErrorCode::CheckFailure, "profile {" + os.str() + "} differs from the expectation");
    }
    if (s.contains("expect_nonzero"))
        for (int d : s.at("expect_nonzero").get<std::vector<int>>())
            if (!prof.counts.count(d))
                fail(ErrorCode::CheckFailure, "no indecomposables in degree " + std::to_string(d));
    if (s.contains("expect_zero"))
        for (int d : s.at("expect_zero").get<std::vector<int>>())
            if (prof.counts.count(d))
                fail(ErrorCode::CheckFailure, "unexpected indecomposables in degree " + std::to_string(d));
    if (s.contains("expect_max_degree")) {
        int want = s.at("expect_max_degree").get<int>();
        int got = prof.counts.empty() ? 0 : prof.counts.rbegin()->first;
        if (got != want)
            fail(ErrorCode::CheckFailure, "largest generator degree " + std::to_string(got) + ", expected " +
                                              std::to_string(want));
    }
    add("profile " + m.label() + " cap " + std::to_string(cap), true, "{" + os.str() + "}");
}

void StepRunner::op_identity(const json& s) {
    auto labels = labels_of(s.at("ambient"));
    GModule m = E().make_module(labels);
    auto lhs = E().parse_in(s.at("lhs").get<std::string>(), m, labels);
    auto rhs = E().parse_in(s.at("rhs").get<std::string>(), m, labels);
    if (lhs != rhs) fail(ErrorCode::CheckFailure, "polynomial identity fails");
    add("identity " + s.at("lhs").get<std::string>() + " = " + s.at("rhs").get<std::string>(), true);
}

void StepRunner::op_invariant_dim(const json& s) {
    GModule m = module_for(s);
    InvariantContext ctx(m);
    const Character& chi = s.contains("weight") ? E().character(s.at("weight").get<std::string>())
                                                : E().trivial_char();
    int d = s.at("degree").get<int>();
    long long expect = s.at("expect").get<long long>();
    auto basis = weight_space_basis(ctx, chi, d);
    long long odim = dimension_oracle(m, chi, d);
    if (basis.dim() != expect || odim != expect)
        fail(ErrorCode::CheckFailure, "dim " + std::to_string(basis.dim()) + " / oracle " + std::to_string(odim) +
                                          " vs expected " + std::to_string(expect));
    add("invariant_dim " + m.label() + " deg " + std::to_string(d) + " weight " + chi.label(), true,
        "dim = " + std::to_string(expect));
}

void StepRunner::op_stabilizer_cases(const json& s) {
    GModule m = module_for(s);
    std::string classifier = s.at("classifier").get<std::string>();
    auto expected_order = [&](const std::vector<Scalar>& v) -> size_t {
        if (classifier == "a4xc2_w1") return a4xc2_expected_order(m, v);
        if (classifier == "m27_lines") return m27_expected_stab(m, E(), v).size();
        if (classifier == "s3xc3") return s3xc3_expected_order(m.summand(0).label, v);
        fail(ErrorCode::ParseError, "unknown classifier " + classifier);
    };
    int checked = 0;
    std::vector<std::vector<Scalar>> case_points;
    if (s.contains("cases"))
        for (const auto& c : s.at("cases")) {
            auto v = E().parse_point(c.at("point").get<std::vector<std::string>>(), m);
            auto stab = m.stabilizer(v);
            if (c.contains("order") && stab.size() != c.at("order").get<size_t>())
                fail(ErrorCode::CheckFailure, "stabilizer order " + std::to_string(stab.size()) + " at a listed point");
            if (c.contains("subgroup")) {
                std::vector<int> gens;
                for (const auto& w : c.at("subgroup")) gens.push_back(parse_group_word(w.get<std::string>(), m.group()));
                if (m.group().subgroup_generated(gens) != stab)
                    fail(ErrorCode::CheckFailure, "stabilizer differs from the stated subgroup");
            }
            if (stab.size() != expected_order(v)) fail(ErrorCode::CheckFailure, "classifier disagrees on a listed point");
            if (classifier == "m27_lines" && m27_expected_stab(m, E(), v) != stab)
                fail(ErrorCode::CheckFailure, "m27 line classification differs from the computed stabilizer");
            case_points.push_back(v);
            ++checked;
        }
    if (s.contains("random")) {
        Rng rng(s.at("random").value("seed", 1234u));
        int count = s.at("random").at("count").get<int>();
        for (int it = 0; it < count; ++it) {
            std::vector<Scalar> v;
            if (!case_points.empty() && rng.below(3) == 0) {
                v = case_points[rng.below(case_points.size())];
                Scalar lambda = random_nonzero_scale(m, E(), rng);
                for (auto& x : v) x = x * lambda;
            } else {
                v = random_point(m, E(), rng, true);
            }
            auto stab = m.stabilizer(v);
            if (stab.size() != expected_order(v))
                fail(ErrorCode::CheckFailure, "classifier disagrees with a random point (iteration " +
                                                  std::to_string(it) + ")");
            if (classifier == "m27_lines" && m27_expected_stab(m, E(), v) != stab)
                fail(ErrorCode::CheckFailure, "m27 line classification differs on a random point");
            ++checked;
        }
    }
    add("stabilizer_cases " + classifier + " on " + m.label(), true, std::to_string(checked) + " points");
}

void StepRunner::op_zero_locus_nonvanish(const json& s) {
    GModule m = module_for(s);
    InvariantContext ctx(m);
    const Character& chi = E().character(s.at("weight").get<std::string>());
    int bound = s.at("bound").get<int>();
    Rng rng(s.value("seed", 99u));
    int count = s.at("count").get<int>();
    std::vector<std::vector<Scalar>> pts;
    for (int i = 0; i < count; ++i) pts.push_back(random_point(m, E(), rng, true));
    auto rep2 = zero_locus_check(ctx, chi, bound, pts);
    int vanishing = 0;
    for (const auto& r : rep2.rows) vanishing += r.all_vanish;
    if (vanishing != 0)
        fail(ErrorCode::CheckFailure, std::to_string(vanishing) + " of " + std::to_string(count) +
                                          " nonzero points had no nonvanishing relative invariant");
    add("zero_locus_nonvanish weight " + chi.label() + " bound " + std::to_string(bound), true,
        std::to_string(count) + " random nonzero points");
}

void StepRunner::op_zero_locus_forward(const json& s) {
    GModule m = module_for(s);
    InvariantContext ctx(m);
    int bound = s.at("bound").get<int>();
    Rng rng(s.value("seed", 7u));
    int count = s.value("count", 10);
    std::vector<std::vector<Scalar>> pts;
    pts.push_back(std::vector<Scalar>(m.dim(), m.field_zero()));
    if (s.contains("points"))
        for (const auto& p : s.at("points")) pts.push_back(E().parse_point(p.get<std::vector<std::string>>(), m));
    for (int i = 0; i < count; ++i) pts.push_back(random_point(m, E(), rng, false));
    int checked = 0;
    for (const auto& chi : E().characters) {
        auto rep2 = zero_locus_check(ctx, chi, bound, pts);
        if (rep2.forward_violations != 0)
            fail(ErrorCode::CheckFailure, "forward direction violated for weight " + chi.label());
        checked += static_cast<int>(pts.size());
    }
    add("zero_locus_forward " + m.label(), true,
        std::to_string(checked) + " (point, weight) pairs, bound " + std::to_string(bound));
}

void StepRunner::op_davenport(const json& s) {
    AbelianGroupTable tab = [&]() {
        if (s.contains("group")) return parse_abelian_spec(s.at("group").get<std::string>());
        std::vector<const Character*> ptrs;
        for (const auto& c : E().characters) ptrs.push_back(&c);
        return AbelianGroupTable::from_characters(ptrs);
    }();
    int expect = s.at("expect").get<int>();
    auto res = davenport(tab);
    if (res.constant != expect)
        fail(ErrorCode::CheckFailure,
             "davenport " + std::to_string(res.constant) + " expected " + std::to_string(expect));
    std::string which = s.contains("group") ? s.at("group").get<std::string>() : "character group";
    add("davenport " + which, true, "D = " + std::to_string(expect));
}

void StepRunner::op_ffbeta(const json& s) {
    GModule m = module_for(s); // field: gf:q handled there
    int d_max = s.value("d_max", m.group().order());
    auto res = finite_field_beta_sep(m, d_max);
    int expect = s.at("expect").get<int>();
    if (res.value != expect)
        fail(ErrorCode::CheckFailure, "beta_sep " + std::to_string(res.value) + " expected " + std::to_string(expect));
    add("finite_field_beta_sep " + m.label(), true,
        "= " + std::to_string(res.value) + " over " + std::to_string(res.point_count) + " points, " +
            std::to_string(res.orbit_count) + " orbits");
}

void StepRunner::op_ff_pair(const json& s) {
    GModule m = module_for(s);
    InvariantContext ctx(m);
    auto v = E().parse_point(s.at("v").get<std::vector<std::string>>(), m);
    auto v2 = E().parse_point(s.at("v2").get<std::vector<std::string>>(), m);
    int d = s.at("degree").get<int>();
    auto fp = invariant_fingerprints(ctx, d, {v, v2});
    if ((fp[0] == fp[1]) != s.at("expect_equal").get<bool>())
        fail(ErrorCode::CheckFailure, "fingerprint comparison unexpected at degree " + std::to_string(d));
    if (orbits_equal(m, v, v2)) fail(ErrorCode::CheckFailure, "witness points share an orbit");
    if (s.contains("separator")) {
        const auto& inv = E().invariant(s.at("separator").get<std::string>());
        SparsePolynomial f(m.dim());
        for (const auto& [mon, c] : inv.poly.terms()) f.add_term(mon, m.to_field(c));
        Scalar a = m.evaluate(f, v), b = m.evaluate(f, v2);
        ParseContext sctx;
        Scalar ea = m.to_field(parse_scalar(s.at("values").at(0).get<std::string>(), sctx));
        Scalar eb = m.to_field(parse_scalar(s.at("values").at(1).get<std::string>(), sctx));
        if (a != ea || b != eb) fail(ErrorCode::CheckFailure, "separator values differ from the stated ones");
    }
    add("ff_pair " + m.label() + " degree " + std::to_string(d), true);
}

// char-5 witness for S4: v = roots of x^4 + 2x^2 + x + 2 over GF(25);
// sigma1(v) = 0, sigma3(v) = -1, all roots distinct so Delta(v) != 0
void StepRunner::op_s4_char5_witness(const json& s) {
    const GFTable* F = gf_field(5, 2);
    auto roots_of = [&](int c0, int c1, int c2) { // c0 + c1 x + c2 x^2? (monic quadratics: x^2+c1x+c0)
        std::vector<int> roots;
        for (int x = 0; x < 25; ++x) {
            int val = F->add(F->mul(x, x), F->add(F->mul(F->from_int(c1), x), F->from_int(c0)));
            (void)c2;
            if (val == 0) roots.push_back(x);
        }
        return roots;
    };
    auto r1 = roots_of(1, 1, 1);  // x^2 + x + 1
    auto r2 = roots_of(2, -1, 1); // x^2 - x + 2
    if (r1.size() != 2 || r2.size() != 2) fail(ErrorCode::CheckFailure, "quadratics do not split over GF(25)");
    std::vector<int> v{r1[0], r1[1], r2[0], r2[1]};
    // the product of the quadratics is the stated quartic: sigma checks
    int sigma1 = 0;
    for (int x : v) sigma1 = F->add(sigma1, x);
    int sigma3 = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) sigma3 = F->add(sigma3, F->mul(v[i], F->mul(v[j], v[k])));
    if (sigma1 != 0) fail(ErrorCode::CheckFailure, "sigma1 nonzero");
    if (sigma3 != F->from_int(-1)) fail(ErrorCode::CheckFailure, "sigma3 is not -1");
    int delta = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) delta = F->mul(delta, F->add(v[i], F->neg(v[j])));
    if (delta == 0) fail(ErrorCode::CheckFailure, "Delta vanishes (roots not distinct)");
    (void)s;
    add("s4_char5_witness over GF(25)", true, "sigma1=0, sigma3=-1, Delta != 0");
}

void StepRunner::op_assemble(const json& s) {
    GModule m = module_for(s);
    int cap = s.at("cap").get<int>();
    AssembleReport arep;
    auto gens = assemble_VU_generators(m, cap, &arep);
    if (s.contains("expect_degrees")) {
        std::vector<int> expect = s.at("expect_degrees").get<std::vector<int>>();
        if (arep.generator_degrees != expect) {
            std::ostringstream os;
            for (int d : arep.generator_degrees) os << d << " ";
            fail(ErrorCode::CheckFailure, "assembled degrees {" + os.str() + "} differ from the expectation");
        }
    }
    if (s.contains("expect_max_degree")) {
        int want = s.at("expect_max_degree").get<int>();
        int got = arep.generator_degrees.empty() ? 0 : arep.generator_degrees.back();
        if (got != want)
            fail(ErrorCode::CheckFailure,
                 "largest assembled degree " + std::to_string(got) + ", expected " + std::to_string(want));
    }
    if (s.contains("expect_truncated") && arep.truncated != s.at("expect_truncated").get<bool>())
        fail(ErrorCode::CheckFailure, "truncation report mismatch");
    // every assembled generator must be a verified invariant
    InvariantContext ctx(m);
    for (const auto& g : gens)
        if (!is_relative_invariant(m, g, ctx.trivial_character()))
            fail(ErrorCode::InvarianceFailure, "assembled generator fails the act check");
    add("assemble " + m.label() + " cap " + std::to_string(cap), true,
        std::to_string(gens.size()) + " generators, degrees as stated");
}

void StepRunner::op_hilbert_complement(const json& s) {
    auto labels = labels_of(s.at("module"));
    GModule m = E().make_module(labels);
    InvariantContext ctx(m);
    const Character& chi = E().character(s.at("weight").get<std::string>());
    int d = s.at("degree").get<int>();
    auto comp = hilbert_complement(ctx, chi, d);
    int expect = s.at("expect_dim").get<int>();
    if (comp.dim() != expect)
        fail(ErrorCode::CheckFailure,
             "complement dim " + std::to_string(comp.dim()) + " expected " + std::to_string(expect));
    if (s.contains("contains")) {
        // the named polynomial must lie in complement + ideal, i.e. the span
        // of the complement modulo the ideal part equals its class: check that
        // the named element is a relative invariant of the right weight and
        // that complement spans the quotient: membership of f in span(ideal +
        // complement) at degree d
        const auto& inv = E().invariant(s.at("contains").get<std::string>());
        auto mons = m.monomials_of_total_degree(d);
        RowSpace span(mons.size());
        for (int e = 1; e <= d; ++e) {
            auto invb = weight_space_basis(ctx, ctx.trivial_character(), e);
            auto relb = weight_space_basis(ctx, chi, d - e);
            for (const auto& fa : invb.basis)
                for (const auto& fb : relb.basis) span.insert((fa * fb).coefficient_row(mons, m.field_zero()));
        }
        for (const auto& f : comp.basis) span.insert(f.coefficient_row(mons, m.field_zero()));
        if (!span.contains(inv.poly.coefficient_row(mons, m.field_zero())))
            fail(ErrorCode::CheckFailure, "stated representative not covered by ideal + complement");
    }
    add("hilbert_complement " + m.label() + " weight " + chi.label() + " deg " + std::to_string(d), true,
        "dim " + std::to_string(expect));
}

void StepRunner::op_twist_trace_equal(const json& s) {
    GModule m = E().make_module(labels_of(s.at("module")));
    GModule other = E().make_module(labels_of(s.at("other")));
    std::vector<int> images;
    for (const auto& w : s.at("alpha")) images.push_back(parse_group_word(w.get<std::string>(), E().group()));
    Automorphism alpha = Automorphism::from_generator_images(E().group(), images);
    GModule twisted = m.twist_by_automorphism(alpha);
    for (int g = 0; g < E().group().order(); ++g)
        if (twisted.character_value(g) != other.character_value(g))
            fail(ErrorCode::CheckFailure, "twisted module traces differ at " + E().group().word_string(g));
    add("twist_trace_equal " + m.label() + " ~ " + other.label(), true);
}

void StepRunner::op_element_order(const json& s) {
    int g = parse_group_word(s.at("word").get<std::string>(), E().group());
    int expect = s.at("expect").get<int>();
    if (E().group().element_order(g) != expect) fail(ErrorCode::CheckFailure, "element order mismatch");
    add("element_order " + s.at("word").get<std::string>(), true, "= " + std::to_string(expect));
}

void StepRunner::op_rep_kernel_order(const json& s) {
    GModule m = E().make_module({s.at("rep").get<std::string>()});
    size_t expect = s.at("expect").get<size_t>();
    auto ker = m.summand_kernel(0);
    if (ker.size() != expect) fail(ErrorCode::CheckFailure, "kernel order " + std::to_string(ker.size()));
    if (s.contains("generated_by")) {
        std::vector<int> gens;
        for (const auto& w : s.at("generated_by")) gens.push_back(parse_group_word(w.get<std::string>(), E().group()));
        if (E().group().subgroup_generated(gens) != ker)
            fail(ErrorCode::CheckFailure, "kernel differs from the stated subgroup");
    }
    add("rep_kernel_order " + s.at("rep").get<std::string>(), true, "= " + std::to_string(expect));
}

void StepRunner::op_character_order(const json& s) {
    const Character& chi = E().character(s.at("label").get<std::string>());
    long long expect = s.at("expect").get<long long>();
    if (chi.order() != expect) fail(ErrorCode::CheckFailure, "character order mismatch");
    add("character_order " + chi.label(), true, "= " + std::to_string(expect));
}

void StepRunner::op_orbit_sample_consistency(const json& s) {
    auto labels = labels_of(s.at("module"));
    GModule m = E().make_module(labels);
    auto ctx = E().context_for(m, labels);
    std::vector<SparsePolynomial> fs;
    for (const auto& n : s.at("invariants")) fs.push_back(E().invariant(n.get<std::string>()).poly);
    Rng rng(s.value("seed", 5u));
    int samples = s.at("samples").get<int>();
    for (int it = 0; it < samples; ++it) {
        auto v = random_point(m, E(), rng, true);
        int g = static_cast<int>(rng.below(m.group().order()));
        auto v2 = m.apply_element(g, v);
        for (size_t i = 0; i < fs.size(); ++i)
            if (m.evaluate(fs[i], v) != m.evaluate(fs[i], v2))
                fail(ErrorCode::CheckFailure, "sampled invariant value differs along an orbit");
    }
    add("orbit_sample_consistency " + m.label(), true, std::to_string(samples) + " samples");
}

void StepRunner::op_act_example(const json& s) {
    auto labels = labels_of(s.at("module"));
    GModule m = E().make_module(labels);
    int g = parse_group_word(s.at("element").get<std::string>(), E().group());
    auto f = E().parse_in(s.at("input").get<std::string>(), m, labels);
    auto expect = E().parse_in(s.at("expect").get<std::string>(), m, labels);
    if (m.act(g, f) != expect) fail(ErrorCode::CheckFailure, "action example mismatch");
    add("act_example " + s.at("element").get<std::string>() + " . " + s.at("input").get<std::string>(), true);
}

void StepRunner::op_evaluate_example(const json& s) {
    auto labels = labels_of(s.at("module"));
    GModule m = E().make_module(labels);
    auto f = E().parse_in(s.at("poly").get<std::string>(), m, labels);
    auto v = E().parse_point(s.at("point").get<std::vector<std::string>>(), m);
    ParseContext sctx;
    sctx.constants = E().constants;
    Scalar expect = m.to_field(parse_scalar(s.at("expect").get<std::string>(), sctx));
    if (m.evaluate(f, v) != expect) fail(ErrorCode::CheckFailure, "evaluation example mismatch");
    add("evaluate_example " + s.at("poly").get<std::string>(), true, "= " + expect.to_string());
}

void StepRunner::op_oracle_sweep(const json& s) {
    int min_cells = s.value("min_cells", 0);
    int total_cells = 0;
    std::vector<std::string> ids =
        s.contains("entries") ? s.at("entries").get<std::vector<std::string>>() : cat.entry_ids();
    for (const auto& id : ids) {
        const CatalogEntry& e = cat.load_entry(id);
        for (const auto& labels : e.oracle_modules) {
            GModule m = e.make_module(labels);
            InvariantContext ctx(m);
            int dmax = m.dim() <= 3 ? 12 : 8;
            if (s.contains("max_degree")) dmax = std::min(dmax, s.at("max_degree").get<int>());
            for (const auto& chi : e.characters) {
                for (int d = 0; d <= dmax; ++d) {
                    auto basis = weight_space_basis(ctx, chi, d);
                    long long odim = dimension_oracle(m, chi, d);
                    if (odim != basis.dim())
                        fail(ErrorCode::CheckFailure, id + " " + m.label() + " weight " + chi.label() + " degree " +
                                                          std::to_string(d) + ": oracle " + std::to_string(odim) +
                                                          " vs basis " + std::to_string(basis.dim()));
                    ++total_cells;
                }
            }
        }
    }
    if (total_cells < min_cells)
        fail(ErrorCode::CheckFailure, "only " + std::to_string(total_cells) + " cells checked");
    add("oracle_sweep", true, std::to_string(total_cells) + " (module, weight, degree) cells, zero mismatches");
}

} // namespace

CheckReport run_theorem_check(const Catalog& cat, const std::string& check_id) {
    json j = load_json(cat.check_path(check_id));
    CheckReport rep;
    rep.id = check_id;
    rep.title = j.value("title", check_id);
    StepRunner runner{cat, nullptr, rep};
    if (j.contains("group")) {
        std::string id = std::to_string(j.at("group").at(0).get<int>()) + "_" +
                         std::to_string(j.at("group").at(1).get<int>());
        runner.entry = &cat.load_entry(id);
    }
    for (const auto& step : j.at("steps")) runner.run(step);
    return rep;
}

std::string report_to_text(const CheckReport& rep) {
    std::ostringstream os;
    os << (rep.passed() ? "PASS" : "FAIL") << " " << rep.id << " - " << rep.title << "\n";
    for (const auto& s : rep.steps) {
        os << "  [" << (s.skipped ? "skip" : (s.pass ? "ok" : "FAIL")) << "] " << s.name;
        if (!s.detail.empty()) os << ": " << s.detail;
        os << "\n";
    }
    return os.str();
}

std::string report_to_json_text(const CheckReport& rep) {
    json j;
    j["id"] = rep.id;
    j["title"] = rep.title;
    j["pass"] = rep.passed();
    json steps = json::array();
    for (const auto& s : rep.steps)
        steps.push_back(json{{"name", s.name}, {"pass", s.pass}, {"skipped", s.skipped}, {"detail", s.detail}});
    j["steps"] = steps;
    return j.dump(2) + "\n";
}

} // namespace invar
