#pragma once

#include <map>
#include <memory>
#include <vector>

#include "invar/rational.hpp"

namespace invar {

// ---------------------------------------------------------------------------
// Cyclotomic rationals Q(zeta_n), stored in the power basis 1, z, ..., z^(phi(n)-1)
// modulo the n-th cyclotomic polynomial. Equality is coefficient comparison.
// ---------------------------------------------------------------------------

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial (integer, monic, ascending).
const std::vector<BigInt>& cyclotomic_polynomial(int n);

class CycRat {
public:
    CycRat() : conductor_(1), coeffs_(1, Rat(0)) {}
    explicit CycRat(const Rat& r) : conductor_(1), coeffs_(1, r) {}
    CycRat(int conductor, std::vector<Rat> coeffs);

    static CycRat zeta(int n); // the canonical primitive n-th root of unity
    static CycRat from_int(long long v) { return CycRat(Rat(v)); }

    int conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // valid only when is_rational()
    Rat rational_value() const { return coeffs_[0]; }

    CycRat embedded(int new_conductor) const;
    // Drop to the smallest conductor that still represents the value exactly.
    CycRat reduced_conductor() const;

    CycRat operator-() const;
    CycRat operator+(const CycRat& o) const;
    CycRat operator-(const CycRat& o) const;
    CycRat operator*(const CycRat& o) const;
    CycRat inverse() const;
    CycRat pow(long long e) const;

    bool operator==(const CycRat& o) const;
    bool operator!=(const CycRat& o) const { return !(*this == o); }

    // Total order used for canonical sorting (not an algebraic order).
    int cmp(const CycRat& o) const;

    std::string to_string() const;

private:
    void reduce_mod_cyclotomic(std::vector<Rat>& c) const;

    int conductor_;
    std::vector<Rat> coeffs_; // length phi(conductor_)
};

// ---------------------------------------------------------------------------
// Small finite fields GF(p^k), p^k <= 2^16, elements stored as indices whose
// base-p digits are the coefficients of the residue polynomial. Multiplication
// goes through exp/log tables built once per field spec.
// ---------------------------------------------------------------------------

struct GFSpec {
    int p = 0;
    int k = 0;
    std::vector<int> poly; // monic irreducible, ascending, length k+1

    bool operator==(const GFSpec& o) const { return p == o.p && k == o.k && poly == o.poly; }
    bool operator<(const GFSpec& o) const {
        if (p != o.p) return p < o.p;
        if (k != o.k) return k < o.k;
        return poly < o.poly;
    }
};

class GFTable {
public:
    explicit GFTable(const GFSpec& spec);

    const GFSpec& spec() const { return spec_; }
    int q() const { return q_; }
    int p() const { return spec_.p; }

    int add(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long e) const;
    int from_int(long long v) const; // reduction of an integer mod p
    int generator() const { return gen_; }
    int element_order(int a) const;

    // log of a nonzero element with respect to generator()
    int log(int a) const;

private:
    GFSpec spec_;
    int q_;
    int gen_;
    std::vector<int> exp_;  // exp_[i] = gen^i, i in [0, q-1)
    std::vector<int> log_;  // inverse of exp_ on nonzero elements
    std::vector<int> add_;  // q*q addition table (q <= 2^16 keeps the GF(4)/GF(25) cases tiny)
};

// Shared registry so equal specs use one table.
const GFTable* gf_table(const GFSpec& spec);
// Default field with a fixed irreducible polynomial (Conway polynomial for the
// small cases used here, otherwise the first monic irreducible in lex order).
const GFTable* gf_field(int p, int k);

struct GFElem {
    const GFTable* field = nullptr;
    int value = 0;

    bool operator==(const GFElem& o) const { return field == o.field && value == o.value; }
};

// ---------------------------------------------------------------------------
// Scalar: tagged union over the two coefficient fields. Binary operations on
// cyclotomic operands unify conductors via lcm; finite-field operands must
// share the field spec.
// ---------------------------------------------------------------------------

class Scalar {
public:
    Scalar() : kind_(Kind::Cyc), cyc_() {}
    Scalar(const CycRat& c) : kind_(Kind::Cyc), cyc_(c) {}
    Scalar(const GFElem& g) : kind_(Kind::GF), gf_(g) {}

    static Scalar integer(long long v) { return Scalar(CycRat::from_int(v)); }
    static Scalar rational(const Rat& r) { return Scalar(CycRat(r)); }
    static Scalar zeta(int n) { return Scalar(CycRat::zeta(n)); }
    static Scalar gf(const GFTable* f, int v) { return Scalar(GFElem{f, v}); }
    static Scalar zero_like(const Scalar& s);
    static Scalar one_like(const Scalar& s);

    bool is_cyclotomic() const { return kind_ == Kind::Cyc; }
    bool is_gf() const { return kind_ == Kind::GF; }
    const CycRat& cyc() const { return cyc_; }
    const GFElem& gfe() const { return gf_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // multiplicative order; fails on zero
    long long multiplicative_order(long long bound = 1 << 20) const;

    // Deterministic total order for sorting/sets.
    int cmp(const Scalar& o) const;
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }

    std::string to_string() const;

private:
    enum class Kind { Cyc, GF };
    Kind kind_;
    CycRat cyc_;
    GFElem gf_;
};

// root_of_unity: deterministic m-th root. Cyclotomic: zeta_m. Finite field:
// generator^((q-1)/m) for the smallest primitive generator; NoSuchRoot when
// m does not divide q-1.
Scalar root_of_unity_cyc(int m);
Scalar root_of_unity_gf(const GFTable* field, int m);

// Canonical inclusion Q(zeta_m) -> Q(zeta_n); BadConductor unless m | n.
CycRat embed(const CycRat& x, int new_conductor);

// Reduction map Q(zeta_n) -> GF(q) sending the canonical zeta_n to the
// deterministic order-n root; requires denominators prime to p and n | q-1
// (n > 1). Used to reinterpret catalog data over a finite field.
GFElem reduce_to_gf(const CycRat& x, const GFTable* field);

} // namespace invar
