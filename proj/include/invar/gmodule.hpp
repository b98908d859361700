#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invar/group.hpp"
#include "invar/polynomial.hpp"

namespace invar {

// Degrees per direct summand.
struct Multidegree {
    std::vector<int> parts;

    int total() const {
        int t = 0;
        for (int p : parts) t += p;
        return t;
    }
    bool operator==(const Multidegree& o) const { return parts == o.parts; }
    bool operator<(const Multidegree& o) const { return parts < o.parts; }
    std::string to_string() const;
};

// Direct sum of matrix representations and characters with the induced action
// on the polynomial ring, the summand multigrading, and fixed variable names
// (x1.., y1.., z1.. for matrix summands; t1, t2, .. for characters).
class GModule {
public:
    struct Summand {
        std::string label;
        std::string var_base; // coordinate letter, e.g. "x" for x1, x2, ...
        int dim = 0;
        bool from_character = false;
        const Character* character = nullptr; // set when from_character
        std::vector<Matrix> mats;             // one per group element
    };

    struct MatrixSummandSpec {
        std::string label;
        std::vector<Matrix> generator_matrices;
        std::string var_base; // empty: positional letter from "xyzuvw"
    };

    // matrix summand specified by per-generator matrices (validated); character
    // summand by a Character (its coordinate is named t1, t2, ... in order).
    static GModule build(const FiniteGroup& group, const std::vector<MatrixSummandSpec>& matrix_summands,
                         const std::vector<const Character*>& character_summands);

    const FiniteGroup& group() const { return *group_; }
    int dim() const { return dim_; }
    int summand_count() const { return static_cast<int>(summands_.size()); }
    const Summand& summand(int i) const { return summands_[i]; }
    const std::vector<std::string>& var_names() const { return var_names_; }
    int grading(int var) const { return grading_map_[var]; }
    const GFTable* gf() const { return gf_; }
    bool is_gf() const { return gf_ != nullptr; }
    // the cyclotomic model this GF module was reduced from, when applicable
    const GModule* cyclotomic_source() const { return source_.get(); }

    std::string label() const; // "W1+W2+U_chi" style

    Scalar field_zero() const;
    Scalar field_one() const;
    // map a catalog (cyclotomic) scalar into this module's field
    Scalar to_field(const Scalar& s) const;

    // full block matrix of an element
    const Matrix& element_matrix_block(int summand, int g) const { return summands_[summand].mats[g]; }
    std::vector<Scalar> apply_element(int g, const std::vector<Scalar>& v) const;

    // induced action on polynomials: g.x_j = sum_i psi(g^{-1})_{ji} x_i
    const SparsePolynomial& variable_image(int g, int var) const { return var_images_[g][var]; }
    SparsePolynomial act(int g, const SparsePolynomial& f) const;
    Scalar evaluate(const SparsePolynomial& f, const std::vector<Scalar>& v) const;

    Multidegree multidegree_of(const Monomial& m) const;
    bool is_multihomogeneous(const SparsePolynomial& f) const;

    std::vector<Monomial> monomials_of_multidegree(const Multidegree& md) const;
    std::vector<Monomial> monomials_of_total_degree(int d) const;
    std::vector<Multidegree> multidegrees_of_total(int d) const; // ascending lex

    // stabilizer {g : psi(g) v = v}, ascending element indices
    std::vector<int> stabilizer(const std::vector<Scalar>& v) const;
    // kernel of the representation restricted to one summand
    std::vector<int> summand_kernel(int summand) const;

    GModule twist_by_automorphism(const Automorphism& alpha) const;
    GModule reduce_to_field(const GFTable* field) const;
    // module made of a subset of this module's summands (same order)
    GModule submodule(const std::vector<int>& summand_indices) const;

    std::vector<Scalar> rescale_summand(const std::vector<Scalar>& v, int summand, const Scalar& lambda) const;

    // trace of psi(g) summed over all summands (used for twist comparisons)
    Scalar character_value(int g) const;

private:
    void finalize(); // grading map, variable names, action cache, validation

    const FiniteGroup* group_ = nullptr;
    std::vector<Summand> summands_;
    int dim_ = 0;
    std::vector<int> grading_map_;
    std::vector<std::string> var_names_;
    const GFTable* gf_ = nullptr;
    std::shared_ptr<const GModule> source_;
    std::vector<std::shared_ptr<const Character>> owned_characters_;
    std::vector<std::vector<SparsePolynomial>> var_images_; // [element][var]
    std::vector<bool> monomial_action_;                     // per element: all images single-term
};

} // namespace invar
