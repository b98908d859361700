#pragma once

#include <optional>
#include <string>

#include "invar/invariants.hpp"

namespace invar {

// exact orbit, deduplicated, ordered by first reaching group element
std::vector<std::vector<Scalar>> orbit(const GModule& m, const std::vector<Scalar>& v);
bool orbits_equal(const GModule& m, const std::vector<Scalar>& v, const std::vector<Scalar>& w);

struct AgreementCell {
    Multidegree multidegree;
    int dim = 0;
    std::string checksum; // FNV-1a over the matched evaluation values
};

struct AgreementResult {
    bool agree = false;
    int bound = 0;
    std::vector<AgreementCell> cells;
    // first separating invariant in canonical order, when agreement fails
    std::optional<SparsePolynomial> separator;
    std::optional<std::pair<Scalar, Scalar>> separator_values;
};

// true iff every weight-trivial basis element of every multidegree with total
// degree <= d evaluates equally at v and w
AgreementResult agree_up_to_degree(InvariantContext& ctx, const std::vector<Scalar>& v, const std::vector<Scalar>& w,
                                   int d);

struct SeparationCertificate {
    std::string gap_id;             // "24_3"
    std::vector<std::string> module_labels;
    std::vector<Scalar> v, v2;
    int agree_bound = 0;
    std::vector<AgreementCell> cells;
    SparsePolynomial separator;
    std::string separator_name;
    Scalar value_v, value_v2;
    bool orbit_distinct = false;
};

SeparationCertificate make_certificate(InvariantContext& ctx, const std::string& gap_id,
                                       const std::vector<std::string>& module_labels, const std::vector<Scalar>& v,
                                       const std::vector<Scalar>& v2, int agree_bound,
                                       const SparsePolynomial& separator, const std::string& separator_name);

// Recomputes every dimension, checksum, orbit claim, separator invariance and
// the two stated values; error (with the failing item named) on mismatch.
void verify_certificate(InvariantContext& ctx, const SeparationCertificate& cert);

std::string certificate_to_json(const SeparationCertificate& cert);
SeparationCertificate certificate_from_json(const std::string& text, const GModule& m);

struct ZeroLocusRow {
    bool stab_outside_kernel = false; // (a) Stab_G(v) not contained in ker(chi)
    bool all_vanish = false;          // (b) all weight-chi basis elements of degree <= bound vanish
};

struct ZeroLocusReport {
    std::vector<ZeroLocusRow> rows;
    int forward_violations = 0;      // (a) true but (b) false: impossible, hard failure
    int bound_limited = 0;           // (b) true but (a) false: inconclusive at this bound
};

ZeroLocusReport zero_locus_check(InvariantContext& ctx, const Character& chi, int degree_bound,
                                 const std::vector<std::vector<Scalar>>& points);

struct FiniteFieldBetaSep {
    int value = -1; // -1: not separated within d_max
    int d_max = 0;
    long long point_count = 0;
    long long orbit_count = 0;
};

// Enumerates all points of a GF(q) module, computes orbits, and finds the least
// d such that the invariant functions of degree <= d separate every pair of
// distinct orbits (pointwise as functions on V).
FiniteFieldBetaSep finite_field_beta_sep(const GModule& m, int d_max);

// evaluation fingerprints of degree <= d invariants on explicit points
std::vector<std::vector<Scalar>> invariant_fingerprints(InvariantContext& ctx, int d,
                                                        const std::vector<std::vector<Scalar>>& points);

// all q^dim points of a GF module
std::vector<std::vector<Scalar>> enumerate_gf_points(const GModule& m);

} // namespace invar
