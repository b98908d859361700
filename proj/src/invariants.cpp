#include "invar/invariants.hpp"

#include <algorithm>
#include <functional>

#include "invar/zerosum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invar {

namespace {

Scalar group_order_inverse(const GModule& m) {
    int n = m.group().order();
    if (m.is_gf() && n % m.gf()->p() == 0)
        fail(ErrorCode::ModularCharacteristic, "characteristic divides the group order");
    return m.to_field(Scalar::integer(n)).inverse();
}

bool use_parallel() {
#ifdef _OPENMP
    int jobs = config().jobs;
    if (jobs == 0) jobs = omp_get_max_threads();
    return jobs > 1;
#else
    return false;
#endif
}

} // namespace

SparsePolynomial project_weight(const GModule& m, const SparsePolynomial& f, const Character& chi) {
    Scalar inv_n = group_order_inverse(m);
    SparsePolynomial acc(m.dim());
    for (int g = 0; g < m.group().order(); ++g) {
        Scalar c = m.to_field(chi.value(g));
        if (c.is_zero()) continue;
        acc += m.act(g, f) * c;
    }
    return acc * inv_n;
}

std::vector<SparsePolynomial> project_monomials_serial(const GModule& m, const Character& chi,
                                                       const std::vector<Monomial>& mons) {
    std::vector<SparsePolynomial> out(mons.size());
    for (size_t i = 0; i < mons.size(); ++i)
        out[i] = project_weight(m, SparsePolynomial(mons[i], m.field_one()), chi);
    return out;
}

std::vector<SparsePolynomial> project_monomials_parallel(const GModule& m, const Character& chi,
                                                         const std::vector<Monomial>& mons) {
    std::vector<SparsePolynomial> out(mons.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (size_t i = 0; i < mons.size(); ++i)
        out[i] = project_weight(m, SparsePolynomial(mons[i], m.field_one()), chi);
    return out;
}

Character InvariantContext::make_trivial(const GModule& m) {
    std::vector<Scalar> ones(m.group().order(), m.field_one());
    return Character(&m.group(), std::move(ones), "1");
}

const std::vector<Monomial>& InvariantContext::cell_monomials(const Multidegree& md) {
    auto it = monomials_.find(md.parts);
    if (it == monomials_.end()) it = monomials_.emplace(md.parts, module_->monomials_of_multidegree(md)).first;
    return it->second;
}

const std::vector<SparsePolynomial>& InvariantContext::cell_basis(const Character& chi, const Multidegree& md) {
    auto key = std::make_pair(chi.label(), md.parts);
    auto it = bases_.find(key);
    if (it != bases_.end()) return it->second;

    const auto& mons = cell_monomials(md);
    auto projected =
        use_parallel() ? project_monomials_parallel(*module_, chi, mons) : project_monomials_serial(*module_, chi, mons);
    RowSpace space(mons.size());
    for (const auto& p : projected) {
        if (p.is_zero()) continue;
        space.insert(p.coefficient_row(mons, module_->field_zero()));
    }
    std::vector<SparsePolynomial> basis;
    for (const auto& row : space.rref()) {
        SparsePolynomial f(module_->dim());
        for (size_t i = 0; i < mons.size(); ++i)
            if (!row[i].is_zero()) f.add_term(mons[i], row[i]);
        basis.push_back(std::move(f));
    }
    return bases_.emplace(std::move(key), std::move(basis)).first->second;
}

WeightSpaceBasis weight_space_basis_cell(InvariantContext& ctx, const Character& chi, const Multidegree& md) {
    WeightSpaceBasis b;
    b.module = &ctx.module();
    b.weight_label = chi.label();
    b.multidegree = md;
    b.degree = md.total();
    b.basis = ctx.cell_basis(chi, md);
    return b;
}

WeightSpaceBasis weight_space_basis(InvariantContext& ctx, const Character& chi, int total_degree) {
    WeightSpaceBasis b;
    b.module = &ctx.module();
    b.weight_label = chi.label();
    b.degree = total_degree;
    for (const auto& md : ctx.module().multidegrees_of_total(total_degree)) {
        const auto& cell = ctx.cell_basis(chi, md);
        b.basis.insert(b.basis.end(), cell.begin(), cell.end());
    }
    return b;
}

// ---------------------------------------------------------------------------
// dimension oracle (Molien)
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Scalar>; // ascending coefficients in t

Poly poly_mul(const Poly& a, const Poly& b, const Scalar& zero, int truncate) {
    Poly r(std::min<size_t>(a.size() + b.size() - 1, truncate + 1), zero);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < r.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// det(I - t*M) by cofactor expansion; entries of I - t*M are linear in t
Poly char_det(const Matrix& mat, const Scalar& zero, const Scalar& one) {
    int n = static_cast<int>(mat.size());
    if (n > 8) fail(ErrorCode::SizeGuard, "summand dimension too large for the oracle determinant");
    // entries[i][j] = delta_ij - t*m_ij as degree-1 polys
    std::vector<std::vector<Poly>> entries(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries[i][j] = Poly{i == j ? one : zero, -mat[i][j]};

    std::function<Poly(std::vector<int>&)> det_rec = [&](std::vector<int>& cols) -> Poly {
        int k = static_cast<int>(cols.size());
        int row = n - k;
        if (k == 1) return entries[row][cols[0]];
        Poly acc{zero};
        for (int c = 0; c < k; ++c) {
            int col = cols[c];
            std::vector<int> rest;
            rest.reserve(k - 1);
            for (int d = 0; d < k; ++d)
                if (d != c) rest.push_back(cols[d]);
            Poly sub = det_rec(rest);
            Poly term = poly_mul(entries[row][col], sub, zero, n);
            if (c % 2 == 1)
                for (auto& x : term) x = -x;
            if (term.size() > acc.size()) acc.resize(term.size(), zero);
            for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
        }
        return acc;
    };
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return det_rec(cols);
}

// power series inverse of p with p[0] = 1, to the given order
Poly series_inverse(const Poly& p, int order, const Scalar& zero, const Scalar& one) {
    Poly s(order + 1, zero);
    s[0] = one;
    for (int k = 1; k <= order; ++k) {
        Scalar acc = zero;
        for (size_t j = 1; j < p.size() && static_cast<int>(j) <= k; ++j) {
            if (p[j].is_zero()) continue;
            acc += p[j] * s[k - j];
        }
        s[k] = -acc;
    }
    return s;
}

long long scalar_to_count(const Scalar& s) {
    if (!s.is_cyclotomic()) fail(ErrorCode::ValidationFailure, "oracle value not rational");
    CycRat c = s.cyc().reduced_conductor();
    if (!c.is_rational() || rat_den(c.rational_value()) != 1)
        fail(ErrorCode::ValidationFailure, "oracle value is not an integer");
    BigInt n = rat_num(c.rational_value());
    if (n < 0) fail(ErrorCode::ValidationFailure, "oracle value negative");
    return n.convert_to<long long>();
}

// per-element, per-summand symmetric power series of the action on variables
std::vector<std::vector<Poly>> molien_series(const GModule& m, int order) {
    const Scalar zero = m.field_zero();
    const Scalar one = m.field_one();
    int n = m.group().order();
    std::vector<std::vector<Poly>> series(n);
    for (int g = 0; g < n; ++g) {
        int ginv = m.group().inverse(g);
        series[g].reserve(m.summand_count());
        for (int s = 0; s < m.summand_count(); ++s) {
            Poly det = char_det(m.element_matrix_block(s, ginv), zero, one);
            series[g].push_back(series_inverse(det, order, zero, one));
        }
    }
    return series;
}

} // namespace

long long dimension_oracle(const GModule& m, const Character& chi, int total_degree) {
    if (m.is_gf()) {
        if (!m.cyclotomic_source())
            fail(ErrorCode::FieldMismatch, "oracle over GF(q) needs the cyclotomic model the module was reduced from");
        return dimension_oracle(*m.cyclotomic_source(), chi, total_degree);
    }
    auto series = molien_series(m, total_degree);
    const Scalar zero = m.field_zero();
    const Scalar one = m.field_one();
    Scalar acc = zero;
    for (int g = 0; g < m.group().order(); ++g) {
        Poly prod{one};
        for (const auto& s : series[g]) prod = poly_mul(prod, s, zero, total_degree);
        if (static_cast<int>(prod.size()) > total_degree) acc += chi.value(g) * prod[total_degree];
    }
    return scalar_to_count(acc * m.to_field(Scalar::integer(m.group().order())).inverse());
}

long long dimension_oracle_cell(const GModule& m, const Character& chi, const Multidegree& md) {
    if (m.is_gf()) {
        if (!m.cyclotomic_source())
            fail(ErrorCode::FieldMismatch, "oracle over GF(q) needs the cyclotomic model the module was reduced from");
        return dimension_oracle_cell(*m.cyclotomic_source(), chi, md);
    }
    if (static_cast<int>(md.parts.size()) != m.summand_count())
        fail(ErrorCode::DimensionMismatch, "multidegree arity mismatch");
    int order = 0;
    for (int p : md.parts) order = std::max(order, p);
    auto series = molien_series(m, order);
    Scalar acc = m.field_zero();
    for (int g = 0; g < m.group().order(); ++g) {
        Scalar term = chi.value(g);
        for (int s = 0; s < m.summand_count(); ++s) term = term * series[g][s][md.parts[s]];
        acc += term;
    }
    return scalar_to_count(acc * m.to_field(Scalar::integer(m.group().order())).inverse());
}

// ---------------------------------------------------------------------------
// generator profile
// ---------------------------------------------------------------------------

namespace {

// deterministic list of products of cell-basis elements spanning the degree-d
// part of (span of lower-degree invariants)^2, grouped by target multidegree
struct ProductTask {
    std::vector<int> target;
    const SparsePolynomial* a;
    const SparsePolynomial* b;
};

std::vector<ProductTask> product_tasks(InvariantContext& ctx, const Character& chi_a, const Character& chi_b, int d,
                                       int min_deg_a) {
    const GModule& m = ctx.module();
    std::vector<ProductTask> tasks;
    for (int d1 = min_deg_a; d1 <= d - 1; ++d1) {
        int d2 = d - d1;
        if (d2 < 1) continue;
        bool symmetric = (&chi_a == &chi_b);
        if (symmetric && d1 > d2) continue;
        for (const auto& mdA : m.multidegrees_of_total(d1)) {
            const auto& basisA = ctx.cell_basis(chi_a, mdA);
            if (basisA.empty()) continue;
            for (const auto& mdB : m.multidegrees_of_total(d2)) {
                if (symmetric && d1 == d2 && mdB < mdA) continue;
                const auto& basisB = ctx.cell_basis(chi_b, mdB);
                if (basisB.empty()) continue;
                std::vector<int> target(mdA.parts.size());
                for (size_t i = 0; i < target.size(); ++i) target[i] = mdA.parts[i] + mdB.parts[i];
                for (size_t i = 0; i < basisA.size(); ++i) {
                    size_t j0 = (symmetric && d1 == d2 && mdA == mdB) ? i : 0;
                    for (size_t j = j0; j < basisB.size(); ++j)
                        tasks.push_back(ProductTask{target, &basisA[i], &basisB[j]});
                }
            }
        }
    }
    return tasks;
}

} // namespace

GeneratorProfile generator_profile(InvariantContext& ctx, int degree_cap) {
    if (degree_cap < 1) fail(ErrorCode::ValidationFailure, "degree cap must be >= 1");
    const GModule& m = ctx.module();
    const Character& triv = ctx.trivial_character();
    GeneratorProfile prof;
    prof.degree_cap = degree_cap;

    for (int d = 1; d <= degree_cap; ++d) {
        auto tasks = product_tasks(ctx, triv, triv, d, 1);
        std::vector<SparsePolynomial> products(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (use_parallel())
#endif
        for (size_t i = 0; i < tasks.size(); ++i) products[i] = *tasks[i].a * *tasks[i].b;

        std::map<std::vector<int>, RowSpace> prod_spaces;
        for (size_t i = 0; i < tasks.size(); ++i) {
            const auto& mons = ctx.cell_monomials(Multidegree{tasks[i].target});
            auto it = prod_spaces.find(tasks[i].target);
            if (it == prod_spaces.end()) it = prod_spaces.emplace(tasks[i].target, RowSpace(mons.size())).first;
            it->second.insert(products[i].coefficient_row(mons, m.field_zero()));
        }

        int count = 0;
        int dim_d = 0;
        for (const auto& md : m.multidegrees_of_total(d)) {
            const auto& basis = ctx.cell_basis(triv, md);
            dim_d += static_cast<int>(basis.size());
            if (basis.empty()) continue;
            const auto& mons = ctx.cell_monomials(md);
            auto it = prod_spaces.find(md.parts);
            RowSpace fresh(mons.size());
            RowSpace& space = (it == prod_spaces.end()) ? fresh : it->second;
            for (const auto& b : basis) {
                if (space.insert(b.coefficient_row(mons, m.field_zero()))) {
                    ++count;
                    prof.reps.emplace_back(d, b);
                }
            }
        }
        if (count > 0) prof.counts[d] = count;
        prof.invariant_dims[d] = dim_d;
    }
    return prof;
}

// ---------------------------------------------------------------------------
// Hilbert complement and the A u B u C assembly
// ---------------------------------------------------------------------------

WeightSpaceBasis hilbert_complement(InvariantContext& ctx, const Character& chi, int degree) {
    const GModule& m = ctx.module();
    const Character& triv = ctx.trivial_character();
    WeightSpaceBasis out;
    out.module = &m;
    out.weight_label = chi.label();
    out.degree = degree;
    if (degree == 0) {
        if (chi.is_trivial()) out.basis.push_back(SparsePolynomial::constant(m.dim(), m.field_one()));
        return out;
    }

    // ideal part: invariant (degree e >= 1) times weight-chi (degree d - e);
    // for trivial chi this includes e = d against the constants
    std::map<std::vector<int>, RowSpace> prod_spaces;
    for (int e = 1; e <= degree; ++e) {
        int rest = degree - e;
        for (const auto& mdA : m.multidegrees_of_total(e)) {
            const auto& basisA = ctx.cell_basis(triv, mdA);
            if (basisA.empty()) continue;
            for (const auto& mdB : m.multidegrees_of_total(rest)) {
                std::vector<SparsePolynomial> basisB;
                if (rest == 0) {
                    if (chi.is_trivial()) basisB.push_back(SparsePolynomial::constant(m.dim(), m.field_one()));
                } else {
                    basisB = ctx.cell_basis(chi, mdB);
                }
                if (basisB.empty()) continue;
                std::vector<int> target(mdA.parts.size());
                for (size_t i = 0; i < target.size(); ++i) target[i] = mdA.parts[i] + mdB.parts[i];
                const auto& mons = ctx.cell_monomials(Multidegree{target});
                auto it = prod_spaces.find(target);
                if (it == prod_spaces.end()) it = prod_spaces.emplace(target, RowSpace(mons.size())).first;
                for (const auto& fa : basisA)
                    for (const auto& fb : basisB) it->second.insert((fa * fb).coefficient_row(mons, m.field_zero()));
            }
        }
    }

    for (const auto& md : m.multidegrees_of_total(degree)) {
        const auto& basis = ctx.cell_basis(chi, md);
        if (basis.empty()) continue;
        const auto& mons = ctx.cell_monomials(md);
        auto it = prod_spaces.find(md.parts);
        RowSpace fresh(mons.size());
        RowSpace& space = (it == prod_spaces.end()) ? fresh : it->second;
        for (const auto& b : basis)
            if (space.insert(b.coefficient_row(mons, m.field_zero()))) out.basis.push_back(b);
    }
    return out;
}

namespace {

// non-decreasing multisets over the U summand indices; visit(free sequence),
// and collect irreducible product-one sequences found one element past a free one
void sequence_dfs(const AbelianGroupTable& tab, const std::vector<int>& summand_to_elem, int start, uint64_t bits,
                  std::vector<int>& seq, int max_len, const std::function<void(const std::vector<int>&)>& on_free,
                  const std::function<void(const std::vector<int>&)>& on_product_one) {
    if (!seq.empty()) on_free(seq);
    if (static_cast<int>(seq.size()) >= max_len) return;
    int m = static_cast<int>(summand_to_elem.size());
    for (int s = start; s < m; ++s) {
        int e = summand_to_elem[s];
        uint64_t next = bits | (1ull << e);
        for (int x = 0; x < tab.n; ++x)
            if (bits & (1ull << x)) next |= 1ull << tab.mul(x, e);
        seq.push_back(s);
        if (next & 1ull) {
            // product-one subsequence appeared; candidate for B if irreducible
            std::vector<int> elems;
            for (int si : seq) elems.push_back(summand_to_elem[si]);
            if (is_irreducible_product_one(tab, elems)) on_product_one(seq);
        } else {
            sequence_dfs(tab, summand_to_elem, s, next, seq, max_len, on_free, on_product_one);
        }
        seq.pop_back();
    }
}

} // namespace

std::vector<SparsePolynomial> assemble_VU_generators(const GModule& v_module, int degree_cap, AssembleReport* report) {
    const FiniteGroup& G = v_module.group();
    std::vector<int> w_idx, u_idx;
    for (int s = 0; s < v_module.summand_count(); ++s)
        (v_module.summand(s).from_character ? u_idx : w_idx).push_back(s);

    AssembleReport rep;
    rep.degree_cap = degree_cap;
    std::vector<SparsePolynomial> gens;

    // variable offsets in V
    std::vector<int> var_offset(v_module.summand_count(), 0);
    {
        int off = 0;
        for (int s = 0; s < v_module.summand_count(); ++s) {
            var_offset[s] = off;
            off += v_module.summand(s).dim;
        }
    }

    // A: generators of K[W]^G, re-embedded into the V variables
    std::map<int, int> w_var_of; // W submodule var -> V var
    std::optional<GModule> W;
    std::optional<InvariantContext> wctx;
    if (!w_idx.empty()) {
        W.emplace(v_module.submodule(w_idx));
        wctx.emplace(*W);
        {
            int wv = 0;
            for (int s : w_idx)
                for (int i = 0; i < v_module.summand(s).dim; ++i) w_var_of[wv++] = var_offset[s] + i;
        }
        GeneratorProfile prof = generator_profile(*wctx, degree_cap);
        for (const auto& [d, f] : prof.reps) {
            SparsePolynomial lifted(v_module.dim());
            for (const auto& [mon, c] : f.terms()) {
                std::vector<int> e(v_module.dim(), 0);
                for (int j = 0; j < mon.nvars(); ++j) e[w_var_of[j]] = mon.e[j];
                lifted.add_term(Monomial(std::move(e)), c);
            }
            gens.push_back(std::move(lifted));
            rep.generator_degrees.push_back(d);
        }
    }

    if (!u_idx.empty()) {
        std::vector<const Character*> u_chars;
        for (int s : u_idx) u_chars.push_back(v_module.summand(s).character);
        for (size_t i = 0; i < u_chars.size(); ++i)
            for (size_t j = i + 1; j < u_chars.size(); ++j)
                if (u_chars[i]->same_values(*u_chars[j]))
                    fail(ErrorCode::ValidationFailure, "duplicate characters among the U summands");

        std::vector<int> input_indices;
        std::vector<std::vector<Scalar>> value_vectors;
        AbelianGroupTable tab = AbelianGroupTable::from_characters(u_chars, &input_indices, &value_vectors);

        auto t_monomial = [&](const std::vector<int>& seq) {
            std::vector<int> e(v_module.dim(), 0);
            for (int s : seq) e[var_offset[u_idx[s]]] += 1;
            return Monomial(std::move(e));
        };

        // B: irreducible product-one sequences as t-monomials
        std::vector<std::vector<int>> free_seqs;
        bool frontier_free_at_cap = false;
        std::vector<int> seq;
        sequence_dfs(
            tab, input_indices, 0, 0, seq, degree_cap,
            [&](const std::vector<int>& s) {
                free_seqs.push_back(s);
                if (static_cast<int>(s.size()) == degree_cap) frontier_free_at_cap = true;
            },
            [&](const std::vector<int>& s) {
                gens.push_back(SparsePolynomial(t_monomial(s), v_module.field_one()));
                rep.generator_degrees.push_back(static_cast<int>(s.size()));
            });

        // C: complement representatives times product-one-free t-monomials
        if (!w_idx.empty()) {
            for (const auto& s : free_seqs) {
                int prod = 0;
                for (int si : s) prod = tab.mul(prod, input_indices[si]);
                int chi_inv_elem = tab.inv(prod);
                if (chi_inv_elem == 0) fail(ErrorCode::ValidationFailure, "free sequence with trivial product");
                Character chi(&G, value_vectors[chi_inv_elem], tab.labels[chi_inv_elem]);
                Monomial tmon = t_monomial(s);
                int k = static_cast<int>(s.size());
                for (int e = 1; e + k <= degree_cap + 1; ++e) {
                    WeightSpaceBasis comp = hilbert_complement(*wctx, chi, e);
                    if (e + k == degree_cap + 1) {
                        // one-degree lookahead past the cap: only feeds the report
                        if (comp.dim() > 0) rep.truncated = true;
                        continue;
                    }
                    for (const auto& h : comp.basis) {
                        SparsePolynomial lifted(v_module.dim());
                        for (const auto& [mon, c] : h.terms()) {
                            std::vector<int> ee(v_module.dim(), 0);
                            for (int j = 0; j < mon.nvars(); ++j) ee[w_var_of[j]] = mon.e[j];
                            lifted.add_term(Monomial(std::move(ee)) * tmon, c);
                        }
                        gens.push_back(std::move(lifted));
                        rep.generator_degrees.push_back(e + k);
                    }
                }
            }
        }
        if (frontier_free_at_cap) rep.truncated = true;
    }

    std::sort(rep.generator_degrees.begin(), rep.generator_degrees.end());
    if (report) *report = rep;
    return gens;
}

bool is_relative_invariant(const GModule& m, const SparsePolynomial& f, const Character& chi) {
    for (int k = 0; k < m.group().gen_count(); ++k) {
        int g = m.group().generator_element(k);
        Scalar w = m.to_field(chi.value(m.group().inverse(g)));
        if (m.act(g, f) != f * w) return false;
    }
    return true;
}

} // namespace invar
