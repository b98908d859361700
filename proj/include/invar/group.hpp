#pragma once

#include <string>
#include <vector>

#include "invar/scalar.hpp"

namespace invar {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix matrix_identity(int n, const Scalar& one);
Matrix matrix_mul(const Matrix& a, const Matrix& b);
std::vector<Scalar> matrix_apply(const Matrix& m, const std::vector<Scalar>& v);
bool matrix_eq(const Matrix& a, const Matrix& b);
int matrix_cmp(const Matrix& a, const Matrix& b);
Scalar matrix_trace(const Matrix& m);
bool matrix_invertible(const Matrix& m);

// Finite group enumerated by breadth-first closure of generator matrices.
// Element 0 is the identity; element words are shortlex normal forms in the
// fixed generator order.
class FiniteGroup {
public:
    static FiniteGroup close_group(const std::vector<Matrix>& generator_matrices, int order_bound,
                                   std::vector<std::string> generator_names = {});

    int order() const { return order_; }
    int gen_count() const { return gen_count_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }

    int multiply(int a, int b) const { return mult_table_[static_cast<size_t>(a) * order_ + b]; }
    int inverse(int a) const { return inv_table_[a]; }
    int identity() const { return 0; }

    // element index of abstract generator k (generators may coincide with
    // previously seen elements; indices come from the BFS)
    int generator_element(int k) const { return gen_elements_[k]; }

    const std::vector<int>& word(int g) const { return words_[g]; }
    std::string word_string(int g) const;

    const Matrix& faithful_matrix(int g) const { return faithful_matrices_[g]; }

    int element_order(int g) const;
    int power(int g, long long e) const;

    // subgroup generated by the given elements, as a sorted element list
    std::vector<int> subgroup_generated(const std::vector<int>& elements) const;

    // spot-check of the table axioms (identity, inverses, random associativity)
    void validate(Rng& rng, int associativity_samples = 1000) const;

    // evaluate a word given as (generator index, exponent) pairs
    int evaluate_word(const std::vector<std::pair<int, long long>>& factors) const;

private:
    int order_ = 0;
    int gen_count_ = 0;
    std::vector<std::string> gen_names_;
    std::vector<int> gen_elements_;
    std::vector<std::vector<int>> words_;
    std::vector<int> mult_table_;
    std::vector<int> inv_table_;
    std::vector<Matrix> faithful_matrices_;
};

// 1-dimensional character with values stored per element.
class Character {
public:
    Character() = default;
    Character(const FiniteGroup* group, std::vector<Scalar> values, std::string label);

    // Extends generator values to all elements along normal-form words and
    // verifies the homomorphism property against the full table.
    static Character validate_character(const FiniteGroup& group, const std::vector<Scalar>& values_on_generators,
                                        const std::string& label);

    const FiniteGroup* group() const { return group_; }
    const std::string& label() const { return label_; }
    const Scalar& value(int g) const { return values_[g]; }
    const std::vector<Scalar>& values() const { return values_; }

    bool is_trivial() const;
    std::vector<int> kernel() const;
    bool contains_in_kernel(int g) const { return values_[g].is_one(); }
    long long order() const; // order in the character group

    Character product(const Character& o, const std::string& label) const;
    Character inverse_char(const std::string& label) const;
    bool same_values(const Character& o) const { return values_ == o.values_; }

private:
    const FiniteGroup* group_ = nullptr;
    std::vector<Scalar> values_;
    std::string label_;
};

// Group automorphism given by images of the abstract generators (as element
// indices); validated to induce a table-preserving bijection.
class Automorphism {
public:
    static Automorphism from_generator_images(const FiniteGroup& group, const std::vector<int>& images);

    const FiniteGroup* group() const { return group_; }
    int apply(int g) const { return map_[g]; }
    const std::vector<int>& map() const { return map_; }

private:
    const FiniteGroup* group_ = nullptr;
    std::vector<int> map_;
};

} // namespace invar
