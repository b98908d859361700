#include "invar/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "invar/invariants.hpp"
#include "invar/zerosum.hpp"

namespace invar {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(ErrorCode::IoError, path + ": " + e.what());
    }
    return j;
}

Matrix parse_matrix(const json& rows, const ParseContext& ctx) {
    Matrix m;
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        for (const auto& cell : row) r.push_back(parse_scalar(cell.get<std::string>(), ctx));
        m.push_back(std::move(r));
    }
    for (const auto& r : m)
        if (r.size() != m.size()) fail(ErrorCode::ValidationFailure, "matrix is not square");
    return m;
}

// commutator subgroup, for the |G/G'| character count check
int commutator_subgroup_order(const FiniteGroup& G) {
    std::vector<int> comms;
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h)
            comms.push_back(G.multiply(G.multiply(G.inverse(g), G.inverse(h)), G.multiply(g, h)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return static_cast<int>(G.subgroup_generated(comms).size());
}

} // namespace

const Character& CatalogEntry::character(const std::string& label) const {
    for (const auto& c : characters)
        if (c.label() == label) return c;
    fail(ErrorCode::UnknownEntry, "no character labelled '" + label + "' in entry " + id);
}

const Character& CatalogEntry::trivial_char() const {
    for (const auto& c : characters)
        if (c.is_trivial()) return c;
    fail(ErrorCode::ValidationFailure, "entry " + id + " lacks the trivial character");
}

const CatalogEntry::NamedInvariant& CatalogEntry::invariant(const std::string& name) const {
    for (const auto& f : invariants)
        if (f.name == name) return f;
    fail(ErrorCode::UnknownEntry, "no invariant named '" + name + "' in entry " + id);
}

std::vector<std::string> CatalogEntry::expand_labels(const std::vector<std::string>& labels) const {
    std::vector<std::string> out;
    for (const auto& l : labels) {
        if (l == "U") {
            for (const auto& c : characters) out.push_back("U_" + c.label());
        } else {
            out.push_back(l);
        }
    }
    return out;
}

GModule CatalogEntry::make_module(const std::vector<std::string>& labels) const {
    // the coordinate letter is fixed by the catalogue position of the
    // representation (W1 -> x, W2 -> y, ...), independent of the module shape
    static const char* letters = "xyzuvw";
    std::vector<GModule::MatrixSummandSpec> mats;
    std::vector<const Character*> chars;
    for (const auto& l : expand_labels(labels)) {
        if (l.rfind("U_", 0) == 0) {
            chars.push_back(&character(l.substr(2)));
        } else {
            auto it = representations.find(l);
            if (it == representations.end()) fail(ErrorCode::UnknownEntry, "no representation '" + l + "' in " + id);
            auto pos = std::find(rep_labels.begin(), rep_labels.end(), l) - rep_labels.begin();
            if (pos >= 6) fail(ErrorCode::SizeGuard, "too many representations for fixed letters");
            mats.push_back({l, it->second, std::string(1, letters[pos])});
        }
    }
    return GModule::build(*group_, mats, chars);
}

ParseContext CatalogEntry::context_for(const GModule& m, const std::vector<std::string>& labels) const {
    ParseContext ctx;
    ctx.nvars = m.dim();
    for (int i = 0; i < m.dim(); ++i) ctx.variables[m.var_names()[i]] = i;
    ctx.constants = constants;
    auto expanded = expand_labels(labels);
    for (const auto& f : invariants)
        if (expand_labels(f.ambient) == expanded) ctx.named[f.name] = f.poly;
    return ctx;
}

SparsePolynomial CatalogEntry::parse_in(const std::string& text, const GModule& m,
                                        const std::vector<std::string>& labels) const {
    return parse_polynomial(text, context_for(m, labels));
}

std::vector<Scalar> CatalogEntry::parse_point(const std::vector<std::string>& coords, const GModule& m) const {
    if (static_cast<int>(coords.size()) != m.dim())
        fail(ErrorCode::DimensionMismatch, "point arity does not match the module dimension");
    ParseContext ctx;
    ctx.constants = constants;
    std::vector<Scalar> v;
    for (const auto& c : coords) v.push_back(m.to_field(parse_scalar(c, ctx)));
    return v;
}

std::string Catalog::default_directory() {
    if (fs::exists("catalog") && fs::is_directory("catalog")) return "catalog";
    return std::string(INVAR_SOURCE_DIR) + "/catalog";
}

Catalog::Catalog(std::string dir) : dir_(std::move(dir)) {
    if (!fs::is_directory(dir_)) fail(ErrorCode::IoError, "catalog directory not found: " + dir_);
}

std::vector<std::string> Catalog::entry_ids() const {
    std::vector<std::string> ids;
    for (const auto& e : fs::directory_iterator(dir_ + "/groups"))
        if (e.path().extension() == ".json") ids.push_back(e.path().stem().string());
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::string> Catalog::check_ids() const {
    std::vector<std::string> ids;
    for (const auto& e : fs::directory_iterator(dir_ + "/checks"))
        if (e.path().extension() == ".json") ids.push_back(e.path().stem().string());
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::string Catalog::check_path(const std::string& id) const { return dir_ + "/checks/" + id + ".json"; }

const CatalogEntry& Catalog::load_entry(const std::string& id) const {
    auto it = cache_.find(id);
    if (it != cache_.end()) return *it->second;
    std::string path = dir_ + "/groups/" + id + ".json";
    if (!fs::exists(path)) fail(ErrorCode::UnknownEntry, "unknown catalog entry '" + id + "'");
    json j = load_json(path);

    auto entry = std::make_unique<CatalogEntry>();
    CatalogEntry& e = *entry;
    e.id = id;
    e.gap = {j.at("gap").at(0).get<int>(), j.at("gap").at(1).get<int>()};
    e.name = j.at("name").get<std::string>();
    e.presentation = j.value("presentation", "");
    e.order = j.at("order").get<int>();
    e.beta = j.at("table1").at("beta").get<int>();
    e.beta_sep = j.at("table1").at("beta_sep").get<int>();
    e.reference = j.at("table1").value("reference", "");
    if (e.gap[0] != e.order) fail(ErrorCode::ValidationFailure, id + ": gap id order differs from the order field");

    // constants resolve in declaration order and may reference earlier ones
    ParseContext cctx;
    if (j.contains("constants"))
        for (const auto& [name, expr] : j.at("constants").items()) {
            cctx.constants[name] = parse_scalar(expr.get<std::string>(), cctx);
            e.constants[name] = cctx.constants[name];
        }

    std::vector<std::string> gen_names = j.at("generators").get<std::vector<std::string>>();

    for (const auto& [label, mats] : j.at("representations").items()) {
        std::vector<Matrix> per_gen;
        for (const auto& m : mats) per_gen.push_back(parse_matrix(m, cctx));
        if (per_gen.size() != gen_names.size())
            fail(ErrorCode::ValidationFailure, id + ": representation '" + label + "' needs one matrix per generator");
        e.representations.emplace(label, std::move(per_gen));
        e.rep_labels.push_back(label);
    }
    std::sort(e.rep_labels.begin(), e.rep_labels.end());

    // close the group on the designated faithful block sum
    std::vector<std::string> closure = j.at("closure").get<std::vector<std::string>>();
    int block_dim = 0;
    for (const auto& l : closure) block_dim += static_cast<int>(e.representations.at(l)[0].size());
    std::vector<Matrix> gens;
    for (size_t k = 0; k < gen_names.size(); ++k) {
        Matrix blk(block_dim, std::vector<Scalar>(block_dim, Scalar::integer(0)));
        int off = 0;
        for (const auto& l : closure) {
            const Matrix& part = e.representations.at(l)[k];
            for (size_t i = 0; i < part.size(); ++i)
                for (size_t jj = 0; jj < part.size(); ++jj) blk[off + i][off + jj] = part[i][jj];
            off += static_cast<int>(part.size());
        }
        gens.push_back(std::move(blk));
    }
    entry->group_ = std::make_shared<FiniteGroup>(FiniteGroup::close_group(gens, e.order + 1, gen_names));
    const FiniteGroup& G = *entry->group_;
    if (G.order() != e.order)
        fail(ErrorCode::ValidationFailure,
             id + ": closure has order " + std::to_string(G.order()) + ", expected " + std::to_string(e.order));
    Rng rng(0x5eed);
    G.validate(rng);

    // declared relations must hold
    if (j.contains("relations"))
        for (const auto& rel : j.at("relations")) {
            int lhs = parse_group_word(rel.at(0).get<std::string>(), G);
            int rhs = parse_group_word(rel.at(1).get<std::string>(), G);
            if (lhs != rhs)
                fail(ErrorCode::ValidationFailure,
                     id + ": relation violated: " + rel.at(0).get<std::string>() + " != " + rel.at(1).get<std::string>());
        }

    // every declared representation must itself be a homomorphism
    for (const auto& [label, mats] : e.representations) (void)GModule::build(G, {{label, mats}}, {});

    // characters: validated, distinct, closed under product, count = |G/G'|
    for (const auto& c : j.at("characters")) {
        std::vector<Scalar> vals;
        for (const auto& v : c.at("values")) vals.push_back(parse_scalar(v.get<std::string>(), cctx));
        e.characters.push_back(Character::validate_character(G, vals, c.at("label").get<std::string>()));
    }
    {
        std::set<std::string> labels;
        for (const auto& c : e.characters)
            if (!labels.insert(c.label()).second)
                fail(ErrorCode::ValidationFailure, id + ": duplicate character label " + c.label());
        std::vector<const Character*> ptrs;
        for (const auto& c : e.characters) ptrs.push_back(&c);
        AbelianGroupTable tab = AbelianGroupTable::from_characters(ptrs);
        if (tab.n != static_cast<int>(e.characters.size()))
            fail(ErrorCode::ValidationFailure, id + ": character list is not closed under products");
        int expected = e.order / commutator_subgroup_order(G);
        if (tab.n != expected)
            fail(ErrorCode::ValidationFailure, id + ": character count " + std::to_string(tab.n) +
                                                   " differs from |G/G'| = " + std::to_string(expected));
    }

    // named invariants: parse over their ambient and check the declared weight
    if (j.contains("invariants"))
        for (const auto& f : j.at("invariants")) {
            CatalogEntry::NamedInvariant inv;
            inv.name = f.at("name").get<std::string>();
            inv.ambient = f.at("ambient").get<std::vector<std::string>>();
            inv.weight = f.value("weight", "1");
            inv.text = f.at("poly").get<std::string>();
            GModule amb = e.make_module(inv.ambient);
            ParseContext ctx = e.context_for(amb, inv.ambient);
            inv.poly = parse_polynomial(inv.text, ctx);
            const Character* chi = nullptr;
            for (const auto& c : e.characters)
                if (c.label() == inv.weight) chi = &c;
            if (!chi) fail(ErrorCode::ValidationFailure, id + ": invariant " + inv.name + " has unknown weight");
            if (!is_relative_invariant(amb, inv.poly, *chi))
                fail(ErrorCode::ValidationFailure,
                     id + ": named invariant " + inv.name + " fails the weight-" + inv.weight + " act check");
            e.invariants.push_back(std::move(inv));
        }

    if (j.contains("oracle_modules"))
        for (const auto& mods : j.at("oracle_modules"))
            e.oracle_modules.push_back(mods.get<std::vector<std::string>>());

    return *cache_.emplace(id, std::move(entry)).first->second;
}

std::vector<Table1Row> Catalog::table1() const {
    json j = load_json(dir_ + "/table1.json");
    std::vector<Table1Row> rows;
    for (const auto& r : j.at("rows")) {
        Table1Row row;
        row.gap = r.at(0).get<std::string>();
        row.name = r.at(1).get<std::string>();
        row.beta = r.at(2).get<std::string>();
        row.beta_sep = r.at(3).get<std::string>();
        row.reference = r.at(4).get<std::string>();
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace invar
