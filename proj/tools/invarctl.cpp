// invarctl: catalog browsing, ad-hoc invariant computations, theorem check
// verification, Davenport constants, and certificate round-trips.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invar/checks.hpp"
#include "invar/separation.hpp"
#include "invar/zerosum.hpp"

using namespace invar;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string catalog_dir = Catalog::default_directory();
    std::string format = "text";
    std::string out;
    int jobs = 0;
    std::uint64_t guard = 5'000'000;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) fail(ErrorCode::IoError, "cannot write " + g.out);
    f << text;
}

std::vector<std::string> split_labels(const std::string& spec) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : spec) {
        if (c == ',' || c == '+') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_list(const GlobalOpts& g, const std::string& filter) {
    Catalog cat(g.catalog_dir);
    auto rows = cat.table1();
    if (g.format == "json") {
        json j = json::array();
        for (const auto& r : rows) {
            if (!filter.empty() && r.gap.find(filter) == std::string::npos && r.name.find(filter) == std::string::npos)
                continue;
            j.push_back(json{{"gap", r.gap}, {"group", r.name}, {"beta", r.beta}, {"beta_sep", r.beta_sep},
                             {"reference", r.reference}});
        }
        emit(g, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "gap        group                      beta  beta_sep  reference\n";
    for (const auto& r : rows) {
        if (!filter.empty() && r.gap.find(filter) == std::string::npos && r.name.find(filter) == std::string::npos)
            continue;
        os << r.gap << std::string(r.gap.size() < 11 ? 11 - r.gap.size() : 1, ' ') << r.name
           << std::string(r.name.size() < 27 ? 27 - r.name.size() : 1, ' ') << r.beta
           << std::string(r.beta.size() < 6 ? 6 - r.beta.size() : 1, ' ') << r.beta_sep
           << std::string(r.beta_sep.size() < 10 ? 10 - r.beta_sep.size() : 1, ' ') << r.reference << "\n";
    }
    emit(g, os.str());
    return 0;
}

GModule apply_field(GModule m, const std::string& field) {
    if (field.empty() || field == "cyclotomic") return m;
    if (field.rfind("gf:", 0) != 0) fail(ErrorCode::ParseError, "--field must be 'cyclotomic' or 'gf:<q>'");
    int q = std::stoi(field.substr(3));
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0, t = q;
    while (t > 1) {
        if (t % p != 0) fail(ErrorCode::ParseError, "field size must be a prime power");
        t /= p;
        ++k;
    }
    return m.reduce_to_field(gf_field(p, k));
}

int cmd_invariants(const GlobalOpts& g, const std::string& entry_id, const std::string& module_spec, int degree,
                   const std::string& weight, const std::string& field) {
    Catalog cat(g.catalog_dir);
    const CatalogEntry& e = cat.load_entry(entry_id);
    auto labels = split_labels(module_spec);
    GModule m = apply_field(e.make_module(labels), field);
    InvariantContext ctx(m);
    const Character& chi = weight.empty() ? e.trivial_char() : e.character(weight);
    auto basis = weight_space_basis(ctx, chi, degree);
    long long odim = dimension_oracle(m, chi, degree);
    if (g.format == "json") {
        json j;
        j["entry"] = entry_id;
        j["module"] = labels;
        j["degree"] = degree;
        j["weight"] = chi.label();
        j["dim"] = basis.dim();
        j["oracle_dim"] = odim;
        json b = json::array();
        for (const auto& f : basis.basis) b.push_back(f.to_string(m.var_names()));
        j["basis"] = b;
        emit(g, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << entry_id << " " << m.label() << " degree " << degree << " weight " << chi.label() << ": dim " << basis.dim()
       << " (oracle " << odim << ")\n";
    for (const auto& f : basis.basis) os << "  " << f.to_string(m.var_names()) << "\n";
    emit(g, os.str());
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::vector<std::string>& ids, bool all) {
    Catalog cat(g.catalog_dir);
    std::vector<std::string> to_run = all ? cat.check_ids() : ids;
    bool ok = true;
    std::ostringstream text;
    json jreports = json::array();
    for (const auto& id : to_run) {
        CheckReport rep = run_theorem_check(cat, id);
        ok = ok && rep.passed();
        if (g.format == "json")
            jreports.push_back(json::parse(report_to_json_text(rep)));
        else
            text << report_to_text(rep);
    }
    if (g.format == "json")
        emit(g, jreports.dump(2) + "\n");
    else
        emit(g, text.str());
    return ok ? 0 : 1;
}

int cmd_davenport(const GlobalOpts& g, const std::string& spec) {
    auto tab = parse_abelian_spec(spec);
    auto res = davenport(tab);
    if (g.format == "json") {
        json j{{"group", spec}, {"davenport", res.constant}};
        json w = json::array();
        for (int e : res.witness) w.push_back(tab.labels[e]);
        j["witness"] = w;
        emit(g, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "D(" << spec << ") = " << res.constant << "  (witness:";
    for (int e : res.witness) os << " " << tab.labels[e];
    os << ")\n";
    emit(g, os.str());
    return 0;
}

// the first certificate step of a theorem-check script defines the shipped
// certificate for that theorem
json first_certificate_step(const Catalog& cat, const std::string& check_id) {
    std::ifstream in(cat.check_path(check_id));
    if (!in) fail(ErrorCode::UnknownEntry, "unknown check '" + check_id + "'");
    json j;
    in >> j;
    for (const auto& step : j.at("steps"))
        if (step.at("op") == "certificate") return json{{"group", j.at("group")}, {"step", step}};
    fail(ErrorCode::UnknownEntry, "check '" + check_id + "' carries no certificate");
}

int cmd_certificate_emit(const GlobalOpts& g, const std::string& check_id) {
    Catalog cat(g.catalog_dir);
    json spec = first_certificate_step(cat, check_id);
    std::string entry_id = std::to_string(spec.at("group").at(0).get<int>()) + "_" +
                           std::to_string(spec.at("group").at(1).get<int>());
    const CatalogEntry& e = cat.load_entry(entry_id);
    const json& s = spec.at("step");
    auto labels = s.at("module").get<std::vector<std::string>>();
    GModule m = e.make_module(labels);
    InvariantContext ctx(m);
    auto v = e.parse_point(s.at("v").get<std::vector<std::string>>(), m);
    auto v2 = e.parse_point(s.at("v2").get<std::vector<std::string>>(), m);
    const auto& inv = e.invariant(s.at("separator").get<std::string>());
    auto cert = make_certificate(ctx, e.id, labels, v, v2, s.at("agree_bound").get<int>(), inv.poly, inv.name);
    emit(g, certificate_to_json(cert));
    return 0;
}

int cmd_certificate_check(const GlobalOpts& g, const std::string& path) {
    Catalog cat(g.catalog_dir);
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    json j = json::parse(buf.str());
    const CatalogEntry& e = cat.load_entry(j.at("group").get<std::string>());
    GModule m = e.make_module(j.at("module").get<std::vector<std::string>>());
    InvariantContext ctx(m);
    auto cert = certificate_from_json(buf.str(), m);
    verify_certificate(ctx, cert);
    if (certificate_to_json(cert) != buf.str())
        fail(ErrorCode::CheckFailure, "certificate does not round-trip byte-exactly");
    emit(g, "certificate OK: " + path + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant-theory engine for small group catalogues"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--catalog", g.catalog_dir, "catalog directory");
    app.add_option("--format", g.format, "output format: text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", g.out, "write output to a file instead of stdout");
    app.add_option("--jobs", g.jobs, "worker threads for the parallel kernels (0 = auto)");
    app.add_option("--guard", g.guard, "monomial-count size guard");

    auto* list = app.add_subcommand("list", "print the catalogue table");
    std::string filter;
    list->add_option("filter", filter, "substring filter on gap id or group name");

    auto* inv = app.add_subcommand("invariants", "basis of a (relative) invariant space");
    std::string entry_id, module_spec, weight, field;
    int degree = 1;
    inv->add_option("entry", entry_id, "catalog entry id, e.g. 27_3")->required();
    inv->add_option("--module", module_spec, "summand labels, e.g. W1,W2 or W,U_(m1,m1)")->required();
    inv->add_option("--degree,--max-degree", degree, "total degree")->required();
    inv->add_option("--weight", weight, "character label (default: trivial)");
    inv->add_option("--field", field, "cyclotomic (default) or gf:<q>");

    auto* ver = app.add_subcommand("verify", "run theorem-check scripts");
    std::vector<std::string> check_ids;
    bool all = false;
    ver->add_option("checks", check_ids, "check ids, e.g. thm-a4tilde");
    ver->add_flag("--all", all, "run the full reproduction suite");

    auto* dav = app.add_subcommand("davenport", "Davenport constant of an abelian group");
    std::string group_spec;
    dav->add_option("group", group_spec, "e.g. C6 or C3xC3")->required();

    auto* cert = app.add_subcommand("certificate", "emit or check separation certificates");
    cert->require_subcommand(1);
    auto* cemit = cert->add_subcommand("emit", "recompute and emit the certificate of a theorem check");
    std::string cert_check;
    cemit->add_option("check", cert_check, "check id with a certificate step")->required();
    auto* ccheck = cert->add_subcommand("check", "verify a certificate file");
    std::string cert_path;
    ccheck->add_option("path", cert_path, "certificate JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    config().jobs = g.jobs;
    config().monomial_guard = g.guard;

    try {
        if (*list) return cmd_list(g, filter);
        if (*inv) return cmd_invariants(g, entry_id, module_spec, degree, weight, field);
        if (*ver) {
            if (!all && check_ids.empty()) {
                std::cerr << "verify: give check ids or --all\n";
                return 2;
            }
            return cmd_verify(g, check_ids, all);
        }
        if (*dav) return cmd_davenport(g, group_spec);
        if (*cemit) return cmd_certificate_emit(g, cert_check);
        if (*ccheck) return cmd_certificate_check(g, cert_path);
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
