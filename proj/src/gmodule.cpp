#include "invar/gmodule.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace invar {

std::string Multidegree::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

GModule GModule::build(const FiniteGroup& group, const std::vector<MatrixSummandSpec>& matrix_summands,
                       const std::vector<const Character*>& character_summands) {
    GModule m;
    m.group_ = &group;
    for (const auto& spec : matrix_summands) {
        const auto& gen_mats = spec.generator_matrices;
        if (static_cast<int>(gen_mats.size()) != group.gen_count())
            fail(ErrorCode::DimensionMismatch, "summand '" + spec.label + "': one matrix per generator expected");
        Summand s;
        s.label = spec.label;
        s.var_base = spec.var_base;
        s.dim = static_cast<int>(gen_mats[0].size());
        s.mats.resize(group.order());
        Scalar one = Scalar::one_like(gen_mats[0][0][0]);
        for (int g = 0; g < group.order(); ++g) {
            Matrix acc = matrix_identity(s.dim, one);
            for (int k : group.word(g)) acc = matrix_mul(acc, gen_mats[k]);
            s.mats[g] = std::move(acc);
        }
        m.summands_.push_back(std::move(s));
    }
    for (const Character* chi : character_summands) {
        Summand s;
        s.label = "U_" + chi->label();
        s.dim = 1;
        s.from_character = true;
        s.character = chi;
        s.mats.resize(group.order());
        for (int g = 0; g < group.order(); ++g) s.mats[g] = Matrix{{chi->value(g)}};
        m.summands_.push_back(std::move(s));
    }
    if (m.summands_.empty()) fail(ErrorCode::ValidationFailure, "module needs at least one summand");
    m.finalize();
    return m;
}

void GModule::finalize() {
    dim_ = 0;
    grading_map_.clear();
    var_names_.clear();
    int matrix_idx = 0, char_idx = 0;
    static const char* letters = "xyzuvw";
    for (size_t s = 0; s < summands_.size(); ++s) {
        auto& sm = summands_[s];
        if (sm.from_character) {
            sm.var_base = "t";
            var_names_.push_back("t" + std::to_string(++char_idx));
        } else {
            if (sm.var_base.empty()) {
                if (matrix_idx >= 6) fail(ErrorCode::SizeGuard, "too many matrix summands for variable naming");
                sm.var_base = std::string(1, letters[matrix_idx]);
            }
            ++matrix_idx;
            for (int i = 1; i <= sm.dim; ++i) var_names_.push_back(sm.var_base + std::to_string(i));
        }
        for (int i = 0; i < sm.dim; ++i) grading_map_.push_back(static_cast<int>(s));
        dim_ += sm.dim;
    }
    {
        std::set<std::string> uniq(var_names_.begin(), var_names_.end());
        if (uniq.size() != var_names_.size()) fail(ErrorCode::ValidationFailure, "duplicate variable names in module");
    }

    // field detection
    gf_ = nullptr;
    for (const auto& sm : summands_)
        for (const auto& row : sm.mats[0])
            for (const auto& x : row)
                if (x.is_gf()) gf_ = x.gfe().field;

    // representation validation: rho(g) rho(h) = rho(gh) on all table pairs
    const int n = group_->order();
    for (const auto& sm : summands_)
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                if (!matrix_eq(matrix_mul(sm.mats[g], sm.mats[h]), sm.mats[group_->multiply(g, h)]))
                    fail(ErrorCode::ValidationFailure,
                         "summand '" + sm.label + "' is not a homomorphism at (" + group_->word_string(g) + ", " +
                             group_->word_string(h) + ")");

    // action cache: image of x_j under g is row j of psi(g^{-1}) within its block
    var_images_.assign(n, {});
    monomial_action_.assign(n, true);
    for (int g = 0; g < n; ++g) {
        int ginv = group_->inverse(g);
        var_images_[g].reserve(dim_);
        int offset = 0;
        for (const auto& sm : summands_) {
            for (int j = 0; j < sm.dim; ++j) {
                SparsePolynomial img(dim_);
                int terms = 0;
                for (int i = 0; i < sm.dim; ++i) {
                    const Scalar& c = sm.mats[ginv][j][i];
                    if (c.is_zero()) continue;
                    std::vector<int> e(dim_, 0);
                    e[offset + i] = 1;
                    img.add_term(Monomial(std::move(e)), c);
                    ++terms;
                }
                if (terms != 1) monomial_action_[g] = false;
                var_images_[g].push_back(std::move(img));
            }
            offset += sm.dim;
        }
    }
}

std::string GModule::label() const {
    std::ostringstream os;
    for (size_t i = 0; i < summands_.size(); ++i) {
        if (i) os << "+";
        os << summands_[i].label;
    }
    return os.str();
}

Scalar GModule::field_zero() const { return gf_ ? Scalar::gf(gf_, 0) : Scalar::integer(0); }
Scalar GModule::field_one() const { return gf_ ? Scalar::gf(gf_, 1) : Scalar::integer(1); }

Scalar GModule::to_field(const Scalar& s) const {
    if (!gf_) {
        if (s.is_gf()) fail(ErrorCode::FieldMismatch, "GF scalar in a cyclotomic module");
        return s;
    }
    if (s.is_gf()) {
        if (s.gfe().field != gf_) fail(ErrorCode::FieldMismatch, "scalar from a different finite field");
        return s;
    }
    return Scalar(reduce_to_gf(s.cyc(), gf_));
}

std::vector<Scalar> GModule::apply_element(int g, const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != dim_) fail(ErrorCode::DimensionMismatch, "vector has wrong dimension");
    std::vector<Scalar> out;
    out.reserve(dim_);
    int offset = 0;
    for (const auto& sm : summands_) {
        std::vector<Scalar> block(v.begin() + offset, v.begin() + offset + sm.dim);
        auto img = matrix_apply(sm.mats[g], block);
        out.insert(out.end(), img.begin(), img.end());
        offset += sm.dim;
    }
    return out;
}

SparsePolynomial GModule::act(int g, const SparsePolynomial& f) const {
    if (f.nvars() != 0 && f.nvars() != dim_) fail(ErrorCode::DimensionMismatch, "polynomial over wrong variable set");
    SparsePolynomial out(dim_);
    if (monomial_action_[g]) {
        // every variable maps to coeff * single variable
        for (const auto& [m, c] : f.terms()) {
            std::vector<int> e(dim_, 0);
            Scalar coef = c;
            for (int j = 0; j < dim_; ++j) {
                int ex = m.e[j];
                if (ex == 0) continue;
                const auto& img = var_images_[g][j];
                const auto& [vm, vc] = *img.terms().begin();
                int target = 0;
                for (int i = 0; i < dim_; ++i)
                    if (vm.e[i]) target = i;
                e[target] += ex;
                if (!vc.is_one()) coef = coef * vc.pow(ex);
            }
            out.add_term(Monomial(std::move(e)), coef);
        }
        return out;
    }
    // dense path with per-variable power caching
    std::vector<std::vector<SparsePolynomial>> pows(dim_);
    for (const auto& [m, c] : f.terms()) {
        SparsePolynomial term = SparsePolynomial::constant(dim_, c);
        for (int j = 0; j < dim_; ++j) {
            int ex = m.e[j];
            if (ex == 0) continue;
            auto& pv = pows[j];
            if (pv.empty()) pv.push_back(SparsePolynomial::constant(dim_, field_one()));
            while (static_cast<int>(pv.size()) <= ex) pv.push_back(pv.back() * var_images_[g][j]);
            term = term * pv[ex];
        }
        out += term;
    }
    return out;
}

Scalar GModule::evaluate(const SparsePolynomial& f, const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != dim_) fail(ErrorCode::DimensionMismatch, "point has wrong dimension");
    if (f.is_zero()) return field_zero();
    return f.evaluate(v);
}

Multidegree GModule::multidegree_of(const Monomial& m) const {
    Multidegree md;
    md.parts.assign(summands_.size(), 0);
    for (int j = 0; j < dim_; ++j) md.parts[grading_map_[j]] += m.e[j];
    return md;
}

bool GModule::is_multihomogeneous(const SparsePolynomial& f) const {
    if (f.is_zero()) return true;
    Multidegree md = multidegree_of(f.terms().begin()->first);
    for (const auto& [m, c] : f.terms())
        if (!(multidegree_of(m) == md)) return false;
    return true;
}

std::vector<Monomial> GModule::monomials_of_multidegree(const Multidegree& md) const {
    if (static_cast<int>(md.parts.size()) != summand_count())
        fail(ErrorCode::DimensionMismatch, "multidegree has wrong arity");
    for (int p : md.parts)
        if (p < 0) fail(ErrorCode::ValidationFailure, "negative multidegree entry");
    // cartesian product of per-summand enumerations
    std::vector<std::vector<Monomial>> per;
    unsigned long long count = 1;
    int offset = 0;
    for (int s = 0; s < summand_count(); ++s) {
        auto part = monomials_of_degree(summands_[s].dim, md.parts[s]);
        count *= part.size();
        if (count > config().monomial_guard) fail(ErrorCode::SizeGuardExceeded, "cell exceeds the size guard");
        per.push_back(std::move(part));
        offset += summands_[s].dim;
    }
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<size_t> idx(summand_count(), 0);
    while (true) {
        std::vector<int> e;
        e.reserve(dim_);
        for (int s = 0; s < summand_count(); ++s)
            e.insert(e.end(), per[s][idx[s]].e.begin(), per[s][idx[s]].e.end());
        out.push_back(Monomial(std::move(e)));
        int s = summand_count() - 1;
        while (s >= 0) {
            if (++idx[s] < per[s].size()) break;
            idx[s] = 0;
            --s;
        }
        if (s < 0) break;
    }
    std::sort(out.begin(), out.end(), GrevlexGreater());
    return out;
}

std::vector<Monomial> GModule::monomials_of_total_degree(int d) const { return monomials_of_degree(dim_, d); }

std::vector<Multidegree> GModule::multidegrees_of_total(int d) const {
    std::vector<Multidegree> out;
    std::vector<int> cur(summand_count(), 0);
    // lexicographically ascending compositions of d into summand_count parts
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == summand_count() - 1) {
            cur[pos] = rest;
            out.push_back(Multidegree{cur});
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            rec(pos + 1, rest - v);
        }
    };
    if (summand_count() == 0) return out;
    rec(0, d);
    return out;
}

std::vector<int> GModule::stabilizer(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != dim_) fail(ErrorCode::DimensionMismatch, "vector has wrong dimension");
    std::vector<int> stab;
    for (int g = 0; g < group_->order(); ++g)
        if (apply_element(g, v) == v) stab.push_back(g);
    return stab;
}

std::vector<int> GModule::summand_kernel(int summand) const {
    const auto& sm = summands_[summand];
    Matrix id = matrix_identity(sm.dim, Scalar::one_like(sm.mats[0][0][0]));
    std::vector<int> ker;
    for (int g = 0; g < group_->order(); ++g)
        if (matrix_eq(sm.mats[g], id)) ker.push_back(g);
    return ker;
}

GModule GModule::twist_by_automorphism(const Automorphism& alpha) const {
    GModule m;
    m.group_ = group_;
    m.gf_ = gf_;
    m.summands_ = summands_;
    for (auto& sm : m.summands_) {
        std::vector<Matrix> twisted(group_->order());
        for (int g = 0; g < group_->order(); ++g) twisted[g] = sm.mats[alpha.apply(g)];
        sm.mats = std::move(twisted);
        if (sm.from_character) {
            std::vector<Scalar> vals(group_->order());
            for (int g = 0; g < group_->order(); ++g) vals[g] = sm.mats[g][0][0];
            auto chi = std::make_shared<Character>(group_, std::move(vals), sm.character->label() + "oalpha");
            sm.character = chi.get();
            m.owned_characters_.push_back(std::move(chi));
        }
        sm.label += "~";
    }
    m.finalize();
    return m;
}

GModule GModule::reduce_to_field(const GFTable* field) const {
    if (gf_) fail(ErrorCode::FieldMismatch, "module is already over a finite field");
    if (group_->order() % field->p() == 0)
        fail(ErrorCode::ModularCharacteristic, "characteristic divides the group order");
    GModule m;
    m.group_ = group_;
    m.gf_ = field;
    m.summands_ = summands_;
    for (auto& sm : m.summands_) {
        for (auto& mat : sm.mats)
            for (auto& row : mat)
                for (auto& x : row) x = Scalar(reduce_to_gf(x.cyc(), field));
        if (sm.from_character) {
            std::vector<Scalar> vals(group_->order());
            for (int g = 0; g < group_->order(); ++g) vals[g] = sm.mats[g][0][0];
            auto chi = std::make_shared<Character>(group_, std::move(vals), sm.character->label());
            sm.character = chi.get();
            m.owned_characters_.push_back(std::move(chi));
        }
    }
    m.source_ = std::make_shared<GModule>(*this);
    m.finalize();
    return m;
}

GModule GModule::submodule(const std::vector<int>& summand_indices) const {
    GModule m;
    m.group_ = group_;
    m.gf_ = gf_;
    for (int i : summand_indices) m.summands_.push_back(summands_[i]);
    m.owned_characters_ = owned_characters_;
    if (source_) {
        m.source_ = std::make_shared<GModule>(source_->submodule(summand_indices));
    }
    m.finalize();
    return m;
}

std::vector<Scalar> GModule::rescale_summand(const std::vector<Scalar>& v, int summand, const Scalar& lambda) const {
    if (lambda.is_zero()) fail(ErrorCode::ZeroScale, "rescale by zero");
    if (static_cast<int>(v.size()) != dim_) fail(ErrorCode::DimensionMismatch, "vector has wrong dimension");
    std::vector<Scalar> out = v;
    int offset = 0;
    for (int s = 0; s < summand_count(); ++s) {
        if (s == summand)
            for (int i = 0; i < summands_[s].dim; ++i) out[offset + i] = out[offset + i] * lambda;
        offset += summands_[s].dim;
    }
    return out;
}

Scalar GModule::character_value(int g) const {
    Scalar t = field_zero();
    for (const auto& sm : summands_) t += matrix_trace(sm.mats[g]);
    return t;
}

} // namespace invar
