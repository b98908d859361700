#pragma once

#include <map>
#include <optional>

#include "invar/gmodule.hpp"
#include "invar/linalg.hpp"

namespace invar {

// Averaging projector onto the weight-chi isotypic component:
//   P_chi(f) = (1/|G|) sum_g chi(g) * (g.f)
// Idempotent, identity on weight-chi relative invariants, zero elsewhere.
SparsePolynomial project_weight(const GModule& m, const SparsePolynomial& f, const Character& chi);

// projections of a monomial list; the parallel kernel and its serial reference
// produce identical output (order is by input index)
std::vector<SparsePolynomial> project_monomials_serial(const GModule& m, const Character& chi,
                                                       const std::vector<Monomial>& mons);
std::vector<SparsePolynomial> project_monomials_parallel(const GModule& m, const Character& chi,
                                                         const std::vector<Monomial>& mons);

struct WeightSpaceBasis {
    const GModule* module = nullptr;
    std::string weight_label;
    std::optional<Multidegree> multidegree; // empty: graded by total degree only
    int degree = 0;
    std::vector<SparsePolynomial> basis; // canonical RREF representatives
    int dim() const { return static_cast<int>(basis.size()); }
};

// Memoizes cell bases per (weight, multidegree) for one module.
class InvariantContext {
public:
    explicit InvariantContext(const GModule& m) : module_(&m), trivial_(make_trivial(m)) {}

    const GModule& module() const { return *module_; }
    const Character& trivial_character() const { return trivial_; }

    const std::vector<SparsePolynomial>& cell_basis(const Character& chi, const Multidegree& md);
    const std::vector<Monomial>& cell_monomials(const Multidegree& md);

    static Character make_trivial(const GModule& m);

private:
    const GModule* module_;
    Character trivial_;
    // keyed by (weight label, multidegree); labels must be distinct per weight
    // within one module, which the catalog validates on load
    std::map<std::pair<std::string, std::vector<int>>, std::vector<SparsePolynomial>> bases_;
    std::map<std::vector<int>, std::vector<Monomial>> monomials_;
};

WeightSpaceBasis weight_space_basis_cell(InvariantContext& ctx, const Character& chi, const Multidegree& md);
WeightSpaceBasis weight_space_basis(InvariantContext& ctx, const Character& chi, int total_degree);

// Molien-style dimension of the weight-chi component from traces of group
// elements on symmetric powers; no polynomial construction. For GF modules the
// sum is evaluated on the cyclotomic model the module was reduced from.
long long dimension_oracle(const GModule& m, const Character& chi, int total_degree);
long long dimension_oracle_cell(const GModule& m, const Character& chi, const Multidegree& md);

struct GeneratorProfile {
    int degree_cap = 0;
    std::map<int, int> counts;                              // degree -> indecomposable count
    std::vector<std::pair<int, SparsePolynomial>> reps;     // chosen representatives
    std::map<int, int> invariant_dims;                      // degree -> dim K[V]^G_d
};

// counts[d] = dim K[V]^G_d - dim (span of products of lower-degree invariants)_d,
// computed cell-by-cell in the summand multigrading
GeneratorProfile generator_profile(InvariantContext& ctx, int degree_cap);

// Basis of a complement of (K[W]^G_+ . K[W]^{G,chi})_d inside K[W]^{G,chi}_d,
// chosen greedily against the canonical basis order.
WeightSpaceBasis hilbert_complement(InvariantContext& ctx, const Character& chi, int degree);

struct AssembleReport {
    int degree_cap = 0;
    // true when candidates may exist beyond the cap: a product-one free
    // sequence of full cap length was found, or a complement space is still
    // nonzero in the first degree past the cap
    bool truncated = false;
    std::vector<int> generator_degrees;
};

// Homogeneous generating system of K[W + U]^G assembled from
//   A: generator representatives of K[W]^G,
//   B: t-monomials of irreducible product-one sequences over the characters of U,
//   C: Hilbert-complement representatives times product-one-free t-monomials.
std::vector<SparsePolynomial> assemble_VU_generators(const GModule& v_module, int degree_cap, AssembleReport* report);

// act-invariance check: f is a relative invariant of weight chi
bool is_relative_invariant(const GModule& m, const SparsePolynomial& f, const Character& chi);

} // namespace invar
