#include "invar/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "invar/linalg.hpp"

namespace invar {

Matrix matrix_identity(int n, const Scalar& one) {
    Matrix m(n, std::vector<Scalar>(n, Scalar::zero_like(one)));
    for (int i = 0; i < n; ++i) m[i][i] = one;
    return m;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = static_cast<int>(b[0].size());
    Matrix r(n, std::vector<Scalar>(m, Scalar::zero_like(a[0][0])));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                if (b[l][j].is_zero()) continue;
                r[i][j] += a[i][l] * b[l][j];
            }
        }
    return r;
}

std::vector<Scalar> matrix_apply(const Matrix& m, const std::vector<Scalar>& v) {
    int n = static_cast<int>(m.size());
    std::vector<Scalar> r(n, Scalar::zero_like(m[0][0]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m[i][j].is_zero() || v[j].is_zero()) continue;
            r[i] += m[i][j] * v[j];
        }
    return r;
}

bool matrix_eq(const Matrix& a, const Matrix& b) { return matrix_cmp(a, b) == 0; }

int matrix_cmp(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) {
            int c = a[i][j].cmp(b[i][j]);
            if (c != 0) return c;
        }
    return 0;
}

Scalar matrix_trace(const Matrix& m) {
    Scalar t = Scalar::zero_like(m[0][0]);
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

bool matrix_invertible(const Matrix& m) {
    RowSpace rs(m.size());
    for (const auto& row : m) rs.insert(row);
    return rs.rank() == m.size();
}

namespace {
struct MatrixLess {
    bool operator()(const Matrix& a, const Matrix& b) const { return matrix_cmp(a, b) < 0; }
};
} // namespace

FiniteGroup FiniteGroup::close_group(const std::vector<Matrix>& generator_matrices, int order_bound,
                                     std::vector<std::string> generator_names) {
    if (generator_matrices.empty()) fail(ErrorCode::ValidationFailure, "no generators");
    size_t dim = generator_matrices[0].size();
    for (const auto& g : generator_matrices) {
        if (g.size() != dim || g[0].size() != dim)
            fail(ErrorCode::DimensionMismatch, "generator matrices must be square of equal size");
        if (!matrix_invertible(g)) fail(ErrorCode::NonInvertible, "singular generator matrix");
    }

    FiniteGroup G;
    G.gen_count_ = static_cast<int>(generator_matrices.size());
    if (generator_names.empty())
        for (int i = 0; i < G.gen_count_; ++i) generator_names.push_back(std::string(1, static_cast<char>('a' + i)));
    G.gen_names_ = std::move(generator_names);

    Scalar one = Scalar::one_like(generator_matrices[0][0][0]);
    Matrix id = matrix_identity(static_cast<int>(dim), one);

    std::map<Matrix, int, MatrixLess> index;
    G.faithful_matrices_.push_back(id);
    G.words_.push_back({});
    index.emplace(id, 0);

    // breadth-first closure; first discovery fixes the shortlex normal form
    for (size_t head = 0; head < G.faithful_matrices_.size(); ++head) {
        for (int k = 0; k < G.gen_count_; ++k) {
            Matrix prod = matrix_mul(G.faithful_matrices_[head], generator_matrices[k]);
            if (index.count(prod)) continue;
            if (static_cast<int>(G.faithful_matrices_.size()) >= order_bound)
                fail(ErrorCode::OrderBoundExceeded,
                     "closure exceeded order bound " + std::to_string(order_bound));
            int idx = static_cast<int>(G.faithful_matrices_.size());
            index.emplace(prod, idx);
            G.faithful_matrices_.push_back(std::move(prod));
            auto w = G.words_[head];
            w.push_back(k);
            G.words_.push_back(std::move(w));
        }
    }
    G.order_ = static_cast<int>(G.faithful_matrices_.size());

    G.gen_elements_.resize(G.gen_count_);
    for (int k = 0; k < G.gen_count_; ++k) G.gen_elements_[k] = index.at(generator_matrices[k]);

    G.mult_table_.assign(static_cast<size_t>(G.order_) * G.order_, -1);
    for (int i = 0; i < G.order_; ++i)
        for (int j = 0; j < G.order_; ++j) {
            Matrix prod = matrix_mul(G.faithful_matrices_[i], G.faithful_matrices_[j]);
            auto it = index.find(prod);
            if (it == index.end()) fail(ErrorCode::ValidationFailure, "closure not multiplicatively closed");
            G.mult_table_[static_cast<size_t>(i) * G.order_ + j] = it->second;
        }

    G.inv_table_.assign(G.order_, -1);
    for (int i = 0; i < G.order_; ++i)
        for (int j = 0; j < G.order_; ++j)
            if (G.multiply(i, j) == 0) {
                G.inv_table_[i] = j;
                break;
            }
    for (int i = 0; i < G.order_; ++i)
        if (G.inv_table_[i] < 0) fail(ErrorCode::ValidationFailure, "missing inverse");
    return G;
}

std::string FiniteGroup::word_string(int g) const {
    if (words_[g].empty()) return "e";
    std::ostringstream os;
    // run-length collapse a*a*a -> a^3
    const auto& w = words_[g];
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << "*";
        os << gen_names_[w[i]];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

int FiniteGroup::element_order(int g) const {
    int acc = g;
    int k = 1;
    while (acc != 0) {
        acc = multiply(acc, g);
        ++k;
        if (k > order_) fail(ErrorCode::ValidationFailure, "element order exceeds group order");
    }
    return k;
}

int FiniteGroup::power(int g, long long e) const {
    long long n = element_order(g);
    e %= n;
    if (e < 0) e += n;
    int acc = 0;
    for (long long i = 0; i < e; ++i) acc = multiply(acc, g);
    return acc;
}

std::vector<int> FiniteGroup::subgroup_generated(const std::vector<int>& elements) const {
    std::set<int> seen{0};
    std::vector<int> queue{0};
    for (size_t head = 0; head < queue.size(); ++head)
        for (int g : elements) {
            int x = multiply(queue[head], g);
            if (seen.insert(x).second) queue.push_back(x);
            x = multiply(queue[head], inverse(g));
            if (seen.insert(x).second) queue.push_back(x);
        }
    return std::vector<int>(seen.begin(), seen.end());
}

void FiniteGroup::validate(Rng& rng, int associativity_samples) const {
    for (int i = 0; i < order_; ++i) {
        if (multiply(0, i) != i || multiply(i, 0) != i) fail(ErrorCode::ValidationFailure, "identity misplaced");
        if (multiply(i, inverse(i)) != 0) fail(ErrorCode::ValidationFailure, "inverse table wrong");
    }
    for (int s = 0; s < associativity_samples; ++s) {
        int a = static_cast<int>(rng.below(order_));
        int b = static_cast<int>(rng.below(order_));
        int c = static_cast<int>(rng.below(order_));
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            fail(ErrorCode::ValidationFailure, "associativity violated");
    }
}

int FiniteGroup::evaluate_word(const std::vector<std::pair<int, long long>>& factors) const {
    int acc = 0;
    for (const auto& [gen, exp] : factors) {
        if (gen < 0 || gen >= gen_count_) fail(ErrorCode::ValidationFailure, "generator index out of range");
        acc = multiply(acc, power(gen_elements_[gen], exp));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Character
// ---------------------------------------------------------------------------

Character::Character(const FiniteGroup* group, std::vector<Scalar> values, std::string label)
    : group_(group), values_(std::move(values)), label_(std::move(label)) {}

Character Character::validate_character(const FiniteGroup& group, const std::vector<Scalar>& values_on_generators,
                                        const std::string& label) {
    if (static_cast<int>(values_on_generators.size()) != group.gen_count())
        fail(ErrorCode::DimensionMismatch, "one value per abstract generator expected");
    int n = group.order();
    std::vector<Scalar> vals(n, Scalar::integer(1));
    for (int g = 0; g < n; ++g) {
        Scalar v = Scalar::one_like(values_on_generators.empty() ? Scalar::integer(1) : values_on_generators[0]);
        for (int k : group.word(g)) v = v * values_on_generators[k];
        vals[g] = v;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (vals[group.multiply(a, b)] != vals[a] * vals[b])
                fail(ErrorCode::NotAHomomorphism,
                     "character '" + label + "' violates a relation at (" + group.word_string(a) + ", " +
                         group.word_string(b) + ")");
    if (!vals[0].is_one()) fail(ErrorCode::NotAHomomorphism, "character value at identity is not 1");
    return Character(&group, std::move(vals), label);
}

bool Character::is_trivial() const {
    for (const auto& v : values_)
        if (!v.is_one()) return false;
    return true;
}

std::vector<int> Character::kernel() const {
    std::vector<int> ker;
    for (int g = 0; g < group_->order(); ++g)
        if (values_[g].is_one()) ker.push_back(g);
    return ker;
}

long long Character::order() const {
    long long n = 1;
    for (const auto& v : values_) n = std::lcm(n, v.multiplicative_order(group_->order() + 1));
    return n;
}

Character Character::product(const Character& o, const std::string& label) const {
    std::vector<Scalar> vals(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) vals[i] = values_[i] * o.values_[i];
    return Character(group_, std::move(vals), label);
}

Character Character::inverse_char(const std::string& label) const {
    std::vector<Scalar> vals(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) vals[i] = values_[i].inverse();
    return Character(group_, std::move(vals), label);
}

// ---------------------------------------------------------------------------
// Automorphism
// ---------------------------------------------------------------------------

Automorphism Automorphism::from_generator_images(const FiniteGroup& group, const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != group.gen_count())
        fail(ErrorCode::DimensionMismatch, "one image per abstract generator expected");
    int n = group.order();
    Automorphism a;
    a.group_ = &group;
    a.map_.assign(n, 0);
    for (int g = 0; g < n; ++g) {
        int acc = 0;
        for (int k : group.word(g)) acc = group.multiply(acc, images[k]);
        a.map_[g] = acc;
    }
    std::set<int> img(a.map_.begin(), a.map_.end());
    if (static_cast<int>(img.size()) != n) fail(ErrorCode::NotAnAutomorphism, "generator images do not induce a bijection");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a.map_[group.multiply(x, y)] != group.multiply(a.map_[x], a.map_[y]))
                fail(ErrorCode::NotAnAutomorphism, "generator images do not preserve the multiplication table");
    return a;
}

} // namespace invar
