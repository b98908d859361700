#include "invar/separation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invar {

using nlohmann::json;

namespace {
struct VecLess {
    bool operator()(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            int c = a[i].cmp(b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

std::string fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}
} // namespace

std::vector<std::vector<Scalar>> orbit(const GModule& m, const std::vector<Scalar>& v) {
    std::set<std::vector<Scalar>, VecLess> seen;
    std::vector<std::vector<Scalar>> out;
    for (int g = 0; g < m.group().order(); ++g) {
        auto img = m.apply_element(g, v);
        if (seen.insert(img).second) out.push_back(std::move(img));
    }
    return out;
}

bool orbits_equal(const GModule& m, const std::vector<Scalar>& v, const std::vector<Scalar>& w) {
    if (v.size() != w.size()) fail(ErrorCode::DimensionMismatch, "points of different dimension");
    for (int g = 0; g < m.group().order(); ++g)
        if (m.apply_element(g, v) == w) return true;
    return false;
}

AgreementResult agree_up_to_degree(InvariantContext& ctx, const std::vector<Scalar>& v, const std::vector<Scalar>& w,
                                   int d) {
    if (d < 1) fail(ErrorCode::ValidationFailure, "agreement bound must be >= 1");
    const GModule& m = ctx.module();
    AgreementResult res;
    res.bound = d;
    for (int deg = 1; deg <= d; ++deg) {
        for (const auto& md : m.multidegrees_of_total(deg)) {
            const auto& basis = ctx.cell_basis(ctx.trivial_character(), md);
            if (basis.empty()) continue;
            AgreementCell cell;
            cell.multidegree = md;
            cell.dim = static_cast<int>(basis.size());
            std::string evidence;
            for (const auto& f : basis) {
                Scalar a = m.evaluate(f, v);
                Scalar b = m.evaluate(f, w);
                if (a != b) {
                    res.agree = false;
                    res.separator = f;
                    res.separator_values = std::make_pair(a, b);
                    return res;
                }
                evidence += a.to_string();
                evidence += '|';
            }
            cell.checksum = fnv1a(evidence);
            res.cells.push_back(std::move(cell));
        }
    }
    res.agree = true;
    return res;
}

SeparationCertificate make_certificate(InvariantContext& ctx, const std::string& gap_id,
                                       const std::vector<std::string>& module_labels, const std::vector<Scalar>& v,
                                       const std::vector<Scalar>& v2, int agree_bound,
                                       const SparsePolynomial& separator, const std::string& separator_name) {
    const GModule& m = ctx.module();
    SeparationCertificate cert;
    cert.gap_id = gap_id;
    cert.module_labels = module_labels;
    cert.v = v;
    cert.v2 = v2;
    cert.agree_bound = agree_bound;
    AgreementResult agr = agree_up_to_degree(ctx, v, v2, agree_bound);
    if (!agr.agree)
        fail(ErrorCode::CheckFailure, "points are separated below the claimed agreement bound (degree " +
                                          std::to_string(agr.separator->degree()) + ")");
    cert.cells = agr.cells;
    cert.separator = separator;
    cert.separator_name = separator_name;
    cert.value_v = m.evaluate(separator, v);
    cert.value_v2 = m.evaluate(separator, v2);
    if (cert.value_v == cert.value_v2) fail(ErrorCode::CheckFailure, "separator does not separate the points");
    cert.orbit_distinct = !orbits_equal(m, v, v2);
    if (!cert.orbit_distinct) fail(ErrorCode::CheckFailure, "witness points lie in one orbit");
    return cert;
}

void verify_certificate(InvariantContext& ctx, const SeparationCertificate& cert) {
    const GModule& m = ctx.module();
    // separator is a verified invariant
    for (int k = 0; k < m.group().gen_count(); ++k) {
        int g = m.group().generator_element(k);
        if (m.act(g, cert.separator) != cert.separator)
            fail(ErrorCode::InvarianceFailure,
                 "separator is not invariant under generator " + m.group().generator_names()[k]);
    }
    AgreementResult agr = agree_up_to_degree(ctx, cert.v, cert.v2, cert.agree_bound);
    if (!agr.agree)
        fail(ErrorCode::CheckFailure, "agreement fails at degree " + std::to_string(agr.separator->degree()));
    if (agr.cells.size() != cert.cells.size()) fail(ErrorCode::CheckFailure, "agreement cell count mismatch");
    for (size_t i = 0; i < agr.cells.size(); ++i) {
        if (!(agr.cells[i].multidegree == cert.cells[i].multidegree))
            fail(ErrorCode::CheckFailure, "cell multidegree mismatch at index " + std::to_string(i));
        if (agr.cells[i].dim != cert.cells[i].dim)
            fail(ErrorCode::CheckFailure,
                 "dimension mismatch in cell " + cert.cells[i].multidegree.to_string() + ": recomputed " +
                     std::to_string(agr.cells[i].dim) + " vs stored " + std::to_string(cert.cells[i].dim));
        if (agr.cells[i].checksum != cert.cells[i].checksum)
            fail(ErrorCode::CheckFailure, "evaluation checksum mismatch in cell " + cert.cells[i].multidegree.to_string());
    }
    Scalar a = m.evaluate(cert.separator, cert.v);
    Scalar b = m.evaluate(cert.separator, cert.v2);
    if (a != cert.value_v || b != cert.value_v2) fail(ErrorCode::CheckFailure, "separator values differ from stored values");
    if (a == b) fail(ErrorCode::CheckFailure, "separator does not separate");
    if (cert.orbit_distinct != !orbits_equal(m, cert.v, cert.v2))
        fail(ErrorCode::CheckFailure, "orbit distinctness claim wrong");
    if (!cert.orbit_distinct) fail(ErrorCode::CheckFailure, "certificate admits equal orbits");
}

// ---------------------------------------------------------------------------
// JSON round-trip
// ---------------------------------------------------------------------------

namespace {

json scalar_to_json(const Scalar& s) {
    if (s.is_cyclotomic()) {
        const CycRat& c = s.cyc();
        json coeffs = json::array();
        for (const auto& r : c.coeffs()) {
            BigInt num = rat_num(r), den = rat_den(r);
            json pair = json::array();
            // decimal strings beyond 53-bit exactness
            if (num >= -((BigInt(1) << 53)) && num <= (BigInt(1) << 53))
                pair.push_back(num.convert_to<long long>());
            else
                pair.push_back(num.str());
            if (den <= (BigInt(1) << 53))
                pair.push_back(den.convert_to<long long>());
            else
                pair.push_back(den.str());
            coeffs.push_back(pair);
        }
        return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
    }
    const GFElem& e = s.gfe();
    return json{{"p", e.field->spec().p}, {"k", e.field->spec().k}, {"poly", e.field->spec().poly}, {"val", e.value}};
}

BigInt json_to_bigint(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long long>());
}

Scalar scalar_from_json(const json& j) {
    if (j.contains("conductor")) {
        int n = j.at("conductor").get<int>();
        std::vector<Rat> coeffs;
        for (const auto& pair : j.at("coeffs")) coeffs.emplace_back(json_to_bigint(pair.at(0)), json_to_bigint(pair.at(1)));
        return Scalar(CycRat(n, std::move(coeffs)));
    }
    GFSpec spec{j.at("p").get<int>(), j.at("k").get<int>(), j.at("poly").get<std::vector<int>>()};
    return Scalar::gf(gf_table(spec), j.at("val").get<int>());
}

json poly_to_json(const SparsePolynomial& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) terms.push_back(json{{"m", m.e}, {"c", scalar_to_json(c)}});
    return json{{"nvars", f.nvars()}, {"terms", terms}};
}

SparsePolynomial poly_from_json(const json& j) {
    SparsePolynomial f(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) f.add_term(Monomial(t.at("m").get<std::vector<int>>()), scalar_from_json(t.at("c")));
    return f;
}

} // namespace

std::string certificate_to_json(const SeparationCertificate& cert) {
    json j;
    j["schema"] = 1;
    j["group"] = cert.gap_id;
    j["module"] = cert.module_labels;
    json v = json::array(), v2 = json::array();
    for (const auto& s : cert.v) v.push_back(scalar_to_json(s));
    for (const auto& s : cert.v2) v2.push_back(scalar_to_json(s));
    j["v"] = v;
    j["v2"] = v2;
    j["agree_bound"] = cert.agree_bound;
    json cells = json::array();
    for (const auto& c : cert.cells)
        cells.push_back(json{{"multidegree", c.multidegree.parts}, {"dim", c.dim}, {"checksum", c.checksum}});
    j["cells"] = cells;
    j["separator"] = poly_to_json(cert.separator);
    j["separator_name"] = cert.separator_name;
    j["values"] = json::array({scalar_to_json(cert.value_v), scalar_to_json(cert.value_v2)});
    j["orbit_distinct"] = cert.orbit_distinct;
    return j.dump(2) + "\n";
}

SeparationCertificate certificate_from_json(const std::string& text, const GModule& m) {
    json j = json::parse(text);
    SeparationCertificate cert;
    cert.gap_id = j.at("group").get<std::string>();
    cert.module_labels = j.at("module").get<std::vector<std::string>>();
    for (const auto& s : j.at("v")) cert.v.push_back(m.to_field(scalar_from_json(s)));
    for (const auto& s : j.at("v2")) cert.v2.push_back(m.to_field(scalar_from_json(s)));
    cert.agree_bound = j.at("agree_bound").get<int>();
    for (const auto& c : j.at("cells")) {
        AgreementCell cell;
        cell.multidegree.parts = c.at("multidegree").get<std::vector<int>>();
        cell.dim = c.at("dim").get<int>();
        cell.checksum = c.at("checksum").get<std::string>();
        cert.cells.push_back(std::move(cell));
    }
    cert.separator = poly_from_json(j.at("separator"));
    cert.separator_name = j.value("separator_name", "");
    cert.value_v = m.to_field(scalar_from_json(j.at("values").at(0)));
    cert.value_v2 = m.to_field(scalar_from_json(j.at("values").at(1)));
    cert.orbit_distinct = j.at("orbit_distinct").get<bool>();
    return cert;
}

// ---------------------------------------------------------------------------
// zero locus
// ---------------------------------------------------------------------------

ZeroLocusReport zero_locus_check(InvariantContext& ctx, const Character& chi, int degree_bound,
                                 const std::vector<std::vector<Scalar>>& points) {
    const GModule& m = ctx.module();
    // all weight-chi basis elements of degree 1..bound
    std::vector<const SparsePolynomial*> basis;
    for (int d = 1; d <= degree_bound; ++d)
        for (const auto& md : m.multidegrees_of_total(d))
            for (const auto& f : ctx.cell_basis(chi, md)) basis.push_back(&f);

    ZeroLocusReport rep;
    for (const auto& v : points) {
        ZeroLocusRow row;
        for (int g : m.stabilizer(v)) {
            if (!m.to_field(chi.value(g)).is_one()) {
                row.stab_outside_kernel = true;
                break;
            }
        }
        row.all_vanish = true;
        for (const auto* f : basis) {
            if (!m.evaluate(*f, v).is_zero()) {
                row.all_vanish = false;
                break;
            }
        }
        if (row.stab_outside_kernel && !row.all_vanish) ++rep.forward_violations;
        if (row.all_vanish && !row.stab_outside_kernel) ++rep.bound_limited;
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// exhaustive finite-field separation
// ---------------------------------------------------------------------------

std::vector<std::vector<Scalar>> enumerate_gf_points(const GModule& m) {
    if (!m.is_gf()) fail(ErrorCode::FieldMismatch, "point enumeration needs a finite-field module");
    const GFTable* F = m.gf();
    long long q = F->q();
    long long total = 1;
    for (int i = 0; i < m.dim(); ++i) {
        total *= q;
        if (total > 1'000'000) fail(ErrorCode::SizeGuard, "point space exceeds 10^6");
    }
    std::vector<std::vector<Scalar>> pts;
    pts.reserve(total);
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<Scalar> v(m.dim(), Scalar::gf(F, 0));
        long long t = idx;
        for (int i = 0; i < m.dim(); ++i) {
            v[i] = Scalar::gf(F, static_cast<int>(t % q));
            t /= q;
        }
        pts.push_back(std::move(v));
    }
    return pts;
}

std::vector<std::vector<Scalar>> invariant_fingerprints(InvariantContext& ctx, int d,
                                                        const std::vector<std::vector<Scalar>>& points) {
    const GModule& m = ctx.module();
    std::vector<const SparsePolynomial*> basis;
    for (int deg = 1; deg <= d; ++deg)
        for (const auto& md : m.multidegrees_of_total(deg))
            for (const auto& f : ctx.cell_basis(ctx.trivial_character(), md)) basis.push_back(&f);
    std::vector<std::vector<Scalar>> fp(points.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (size_t i = 0; i < points.size(); ++i) {
        fp[i].reserve(basis.size());
        for (const auto* f : basis) fp[i].push_back(m.evaluate(*f, points[i]));
    }
    return fp;
}

FiniteFieldBetaSep finite_field_beta_sep(const GModule& m, int d_max) {
    if (!m.is_gf()) fail(ErrorCode::FieldMismatch, "finite_field_beta_sep needs a GF(q) module");
    if (m.group().order() % m.gf()->p() == 0)
        fail(ErrorCode::ModularCharacteristic, "characteristic divides the group order");
    FiniteFieldBetaSep res;
    res.d_max = d_max;

    auto points = enumerate_gf_points(m);
    res.point_count = static_cast<long long>(points.size());
    std::map<std::vector<Scalar>, size_t, VecLess> point_index;
    for (size_t i = 0; i < points.size(); ++i) point_index.emplace(points[i], i);

    // orbit labels
    std::vector<int> orbit_of(points.size(), -1);
    int orbit_count = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        if (orbit_of[i] >= 0) continue;
        int label = orbit_count++;
        for (int g = 0; g < m.group().order(); ++g) {
            auto img = m.apply_element(g, points[i]);
            orbit_of[point_index.at(img)] = label;
        }
    }
    res.orbit_count = orbit_count;

    InvariantContext ctx(m);
    std::vector<std::vector<Scalar>> fingerprints(points.size());
    for (int d = 1; d <= d_max; ++d) {
        // append values of the degree-d invariants
        std::vector<const SparsePolynomial*> basis;
        for (const auto& md : m.multidegrees_of_total(d))
            for (const auto& f : ctx.cell_basis(ctx.trivial_character(), md)) basis.push_back(&f);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (size_t i = 0; i < points.size(); ++i)
            for (const auto* f : basis) fingerprints[i].push_back(m.evaluate(*f, points[i]));

        // invariants must be constant on orbits; distinct orbits must differ
        std::map<std::vector<Scalar>, int, VecLess> classes;
        bool separated = true;
        for (size_t i = 0; i < points.size(); ++i) {
            auto [it, inserted] = classes.emplace(fingerprints[i], orbit_of[i]);
            if (!inserted && it->second != orbit_of[i]) separated = false;
        }
        if (separated) {
            res.value = d;
            return res;
        }
    }
    return res;
}

} // namespace invar
