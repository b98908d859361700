#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "invar/gmodule.hpp"
#include "invar/parser.hpp"

namespace invar {

// One catalogued group: presentation, representation matrices, the full
// character group, named (relative) invariants, and its Table-1 row. All data
// comes from JSON files and is validated on load.
class CatalogEntry {
public:
    struct NamedInvariant {
        std::string name;
        std::vector<std::string> ambient; // summand labels of the defining module
        std::string weight;               // character label ("1" = invariant)
        std::string text;
        SparsePolynomial poly;
    };

    std::string id;                 // "24_3"
    std::array<int, 2> gap{0, 0};
    std::string name;
    std::string presentation;
    int order = 0;
    int beta = 0;
    int beta_sep = 0;
    std::string reference;
    std::map<std::string, Scalar> constants;
    std::vector<std::string> rep_labels; // declaration order
    std::map<std::string, std::vector<Matrix>> representations;
    std::vector<Character> characters;
    std::vector<NamedInvariant> invariants;
    std::vector<std::vector<std::string>> oracle_modules;

    const FiniteGroup& group() const { return *group_; }

    const Character& character(const std::string& label) const;
    const Character& trivial_char() const;
    const NamedInvariant& invariant(const std::string& name) const;

    // "W1", "U_(1,w)"; "U" expands to one summand per catalogued character
    GModule make_module(const std::vector<std::string>& labels) const;
    std::vector<std::string> expand_labels(const std::vector<std::string>& labels) const;

    // parse context over a module instance: its variables, the entry constants,
    // and every named invariant whose ambient matches the label list
    ParseContext context_for(const GModule& m, const std::vector<std::string>& labels) const;

    SparsePolynomial parse_in(const std::string& text, const GModule& m,
                              const std::vector<std::string>& labels) const;
    std::vector<Scalar> parse_point(const std::vector<std::string>& coords, const GModule& m) const;

private:
    friend class Catalog;
    std::shared_ptr<FiniteGroup> group_;
};

struct Table1Row {
    std::string gap;
    std::string name;
    std::string beta;
    std::string beta_sep;
    std::string reference;
};

class Catalog {
public:
    explicit Catalog(std::string dir = default_directory());

    static std::string default_directory();

    const std::string& directory() const { return dir_; }
    std::vector<std::string> entry_ids() const;
    const CatalogEntry& load_entry(const std::string& id) const;
    std::vector<Table1Row> table1() const;
    std::vector<std::string> check_ids() const;
    std::string check_path(const std::string& id) const;

private:
    std::string dir_;
    mutable std::map<std::string, std::unique_ptr<CatalogEntry>> cache_;
};

} // namespace invar
