#pragma once

#include "invar/catalog.hpp"

namespace invar {

struct SubCheck {
    std::string name;
    bool pass = false;
    bool skipped = false; // best-effort step stopped by a guard
    std::string detail;
};

struct CheckReport {
    std::string id;
    std::string title;
    std::vector<SubCheck> steps;

    bool passed() const {
        for (const auto& s : steps)
            if (!s.pass && !s.skipped) return false;
        return true;
    }
};

// Executes one declarative theorem-check script from catalog/checks/.
CheckReport run_theorem_check(const Catalog& cat, const std::string& check_id);

std::string report_to_text(const CheckReport& rep);
std::string report_to_json_text(const CheckReport& rep);

} // namespace invar
