#pragma once

#include <map>
#include <vector>

#include "invar/scalar.hpp"

namespace invar {

// Exponent vector with cached total degree. The multidegree (degree per direct
// summand) is derived through the owning module's grading map.
struct Monomial {
    std::vector<int> e;
    int deg = 0;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {
        for (int x : e) deg += x;
    }
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const { return deg == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        r.deg += o.deg;
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded reverse lexicographic order, variables ordered by their index
// (summand-major layout is fixed by the module). Returns <0, 0, >0.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

// Canonical term ordering places the grevlex-largest monomial first.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

// Sparse polynomial: monomial -> nonzero coefficient, leading term first.
class SparsePolynomial {
public:
    using TermMap = std::map<Monomial, Scalar, GrevlexGreater>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}
    SparsePolynomial(const Monomial& m, const Scalar& c) : nvars_(m.nvars()) { add_term(m, c); }

    static SparsePolynomial constant(int nvars, const Scalar& c) {
        return SparsePolynomial(Monomial::one(nvars), c);
    }
    static SparsePolynomial variable(int nvars, int index, const Scalar& one);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.deg; }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Scalar& c);

    SparsePolynomial operator-() const;
    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const Scalar& c) const;
    SparsePolynomial pow(int e) const;

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o) { return *this += -o; }

    bool operator==(const SparsePolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Coefficients against an externally fixed monomial list (dense row).
    std::vector<Scalar> coefficient_row(const std::vector<Monomial>& basis, const Scalar& zero) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    int nvars_ = 0;
    TermMap terms_;
};

// All monomials in nvars variables of exact total degree d, canonically ordered
// (grevlex descending). SizeGuardExceeded if the count exceeds the global guard.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

} // namespace invar
