#pragma once

#include <string>
#include <vector>

#include "invar/group.hpp"

namespace invar {

// Finite abelian group as an explicit multiplication table (identity at 0).
struct AbelianGroupTable {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<int> table; // n*n

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
    int inv(int a) const;
    void validate() const; // commutative, identity, inverses

    static AbelianGroupTable cyclic(int n);
    static AbelianGroupTable direct_product(const AbelianGroupTable& a, const AbelianGroupTable& b);
    // closure of a character list under pointwise products; input characters
    // appear first (in order), identity gets index of the trivial character.
    static AbelianGroupTable from_characters(const std::vector<const Character*>& chars,
                                             std::vector<int>* input_indices = nullptr,
                                             std::vector<std::vector<Scalar>>* value_vectors = nullptr);
    // subgroup generated by a subset of elements, as a new table
    AbelianGroupTable subgroup_table(const std::vector<int>& gens) const;
};

// sequences are multisets of element indices, k >= 1, guard k <= 24
bool is_irreducible_product_one(const AbelianGroupTable& g, const std::vector<int>& seq);
bool is_product_one_free(const AbelianGroupTable& g, const std::vector<int>& seq);

struct DavenportResult {
    int constant = 0;
    std::vector<int> witness; // irreducible product-one sequence of maximal length
};

// exact Davenport constant by exhaustive multiset search with subset-product
// pruning; SizeGuard for |g| > 64
DavenportResult davenport(const AbelianGroupTable& g);

// parse "C6", "C3xC3", ... into a table
AbelianGroupTable parse_abelian_spec(const std::string& spec);

} // namespace invar
