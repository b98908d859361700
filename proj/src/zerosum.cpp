#include "invar/zerosum.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invar {

int AbelianGroupTable::inv(int a) const {
    for (int b = 0; b < n; ++b)
        if (mul(a, b) == 0) return b;
    fail(ErrorCode::ValidationFailure, "element without inverse");
}

void AbelianGroupTable::validate() const {
    for (int a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) fail(ErrorCode::ValidationFailure, "identity misplaced");
        inv(a);
        for (int b = 0; b < n; ++b)
            if (mul(a, b) != mul(b, a)) fail(ErrorCode::ValidationFailure, "table is not commutative");
    }
}

AbelianGroupTable AbelianGroupTable::cyclic(int n) {
    AbelianGroupTable g;
    g.n = n;
    g.table.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        g.labels.push_back(a == 0 ? "1" : "g^" + std::to_string(a));
        for (int b = 0; b < n; ++b) g.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    return g;
}

AbelianGroupTable AbelianGroupTable::direct_product(const AbelianGroupTable& a, const AbelianGroupTable& b) {
    AbelianGroupTable g;
    g.n = a.n * b.n;
    g.table.resize(static_cast<size_t>(g.n) * g.n);
    for (int i = 0; i < g.n; ++i) {
        int ia = i / b.n, ib = i % b.n;
        g.labels.push_back("(" + a.labels[ia] + "," + b.labels[ib] + ")");
        for (int j = 0; j < g.n; ++j) {
            int ja = j / b.n, jb = j % b.n;
            g.table[static_cast<size_t>(i) * g.n + j] = a.mul(ia, ja) * b.n + b.mul(ib, jb);
        }
    }
    return g;
}

AbelianGroupTable AbelianGroupTable::from_characters(const std::vector<const Character*>& chars,
                                                     std::vector<int>* input_indices,
                                                     std::vector<std::vector<Scalar>>* value_vectors) {
    if (chars.empty()) fail(ErrorCode::ValidationFailure, "no characters");
    struct VecLess {
        bool operator()(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
            for (size_t i = 0; i < a.size(); ++i) {
                int c = a[i].cmp(b[i]);
                if (c != 0) return c < 0;
            }
            return false;
        }
    };
    std::vector<std::vector<Scalar>> elems;
    std::map<std::vector<Scalar>, int, VecLess> index;
    std::vector<std::string> labels;
    auto intern = [&](const std::vector<Scalar>& v, const std::string& label) {
        auto it = index.find(v);
        if (it != index.end()) return it->second;
        int idx = static_cast<int>(elems.size());
        elems.push_back(v);
        labels.push_back(label);
        index.emplace(v, idx);
        return idx;
    };
    // identity first
    std::vector<Scalar> one(chars[0]->values().size(), Scalar::one_like(chars[0]->value(0)));
    intern(one, "1");
    if (input_indices) input_indices->clear();
    for (const Character* c : chars) {
        int idx = intern(c->values(), c->label());
        if (input_indices) input_indices->push_back(idx);
    }
    // closure under products
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t j = 1; j < elems.size() && elems.size() <= 64; ++j) {
            std::vector<Scalar> prod(one.size());
            for (size_t k = 0; k < one.size(); ++k) prod[k] = elems[head][k] * elems[j][k];
            intern(prod, labels[head] + "*" + labels[j]);
        }
    }
    if (elems.size() > 64) fail(ErrorCode::SizeGuard, "character group closure exceeds 64 elements");
    AbelianGroupTable g;
    g.n = static_cast<int>(elems.size());
    g.labels = labels;
    g.table.resize(static_cast<size_t>(g.n) * g.n);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            std::vector<Scalar> prod(one.size());
            for (size_t k = 0; k < one.size(); ++k) prod[k] = elems[a][k] * elems[b][k];
            auto it = index.find(prod);
            if (it == index.end()) fail(ErrorCode::ValidationFailure, "character set not closed");
            g.table[static_cast<size_t>(a) * g.n + b] = it->second;
        }
    if (value_vectors) *value_vectors = elems;
    g.validate();
    return g;
}

AbelianGroupTable AbelianGroupTable::subgroup_table(const std::vector<int>& gens) const {
    std::vector<int> members{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (size_t head = 0; head < members.size(); ++head)
        for (int g : gens) {
            int x = mul(members[head], g);
            if (!seen[x]) {
                seen[x] = true;
                members.push_back(x);
            }
        }
    std::sort(members.begin(), members.end());
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
    AbelianGroupTable g;
    g.n = static_cast<int>(members.size());
    for (int m : members) g.labels.push_back(labels[m]);
    g.table.resize(static_cast<size_t>(g.n) * g.n);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) g.table[static_cast<size_t>(a) * g.n + b] = pos[mul(members[a], members[b])];
    return g;
}

namespace {

void check_guards(const AbelianGroupTable& g, const std::vector<int>& seq) {
    if (g.n > 64) fail(ErrorCode::SizeGuard, "group exceeds 64 elements");
    if (seq.size() > 24) fail(ErrorCode::LengthGuard, "sequence longer than 24");
    if (seq.empty()) fail(ErrorCode::ValidationFailure, "sequence must be nonempty");
}

// bitset of products of all nonempty subsequences
uint64_t subset_products(const AbelianGroupTable& g, const std::vector<int>& seq) {
    uint64_t bits = 0;
    for (int e : seq) {
        uint64_t next = bits | (1ull << e);
        for (int x = 0; x < g.n; ++x)
            if (bits & (1ull << x)) next |= 1ull << g.mul(x, e);
        bits = next;
    }
    return bits;
}

} // namespace

bool is_product_one_free(const AbelianGroupTable& g, const std::vector<int>& seq) {
    check_guards(g, seq);
    return (subset_products(g, seq) & 1ull) == 0;
}

bool is_irreducible_product_one(const AbelianGroupTable& g, const std::vector<int>& seq) {
    check_guards(g, seq);
    int total = 0;
    for (int e : seq) total = g.mul(total, e);
    if (total != 0) return false;
    if (seq.size() == 1) return true;
    // a proper nonempty subsequence omits at least one position
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i > 0 && seq[i] == seq[i - 1]) continue; // multiset: same removal
        std::vector<int> rest;
        rest.reserve(seq.size() - 1);
        for (size_t j = 0; j < seq.size(); ++j)
            if (j != i) rest.push_back(seq[j]);
        if (subset_products(g, rest) & 1ull) return false;
    }
    return true;
}

namespace {

struct FreeSearchBest {
    int length = 0;
    std::vector<int> seq;

    void offer(const std::vector<int>& s) {
        if (static_cast<int>(s.size()) > length || (static_cast<int>(s.size()) == length && s < seq)) {
            length = static_cast<int>(s.size());
            seq = s;
        }
    }
    void merge(const FreeSearchBest& o) {
        if (o.length > length || (o.length == length && !o.seq.empty() && (seq.empty() || o.seq < seq))) {
            length = o.length;
            seq = o.seq;
        }
    }
};

// DFS over non-decreasing sequences of non-identity elements; bits = products of
// nonempty subsequences so far. Prunes as soon as a product-one subsequence exists.
void free_dfs(const AbelianGroupTable& g, int start, uint64_t bits, std::vector<int>& seq, FreeSearchBest& best) {
    if (!seq.empty()) best.offer(seq);
    for (int e = start; e < g.n; ++e) {
        uint64_t next = bits | (1ull << e);
        for (int x = 0; x < g.n; ++x)
            if (bits & (1ull << x)) next |= 1ull << g.mul(x, e);
        if (next & 1ull) continue; // extension is no longer product-one free
        seq.push_back(e);
        free_dfs(g, e, next, seq, best);
        seq.pop_back();
    }
}

} // namespace

DavenportResult davenport(const AbelianGroupTable& g) {
    if (g.n > 64) fail(ErrorCode::SizeGuard, "group exceeds 64 elements");
    DavenportResult res;
    if (g.n == 1) {
        res.constant = 1;
        res.witness = {0};
        return res;
    }
    // parallel over the first element choice, deterministic merge
    std::vector<FreeSearchBest> per(g.n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int first = 1; first < g.n; ++first) {
        std::vector<int> seq{first};
        uint64_t bits = 1ull << first;
        if (bits & 1ull) continue;
        per[first].offer(seq);
        free_dfs(g, first, bits, seq, per[first]);
    }
    FreeSearchBest best;
    for (const auto& b : per) best.merge(b);

    // maximal product-one free length L gives D = L + 1; appending the inverse
    // of the total product always yields an irreducible product-one sequence
    res.constant = best.length + 1;
    int total = 0;
    for (int e : best.seq) total = g.mul(total, e);
    res.witness = best.seq;
    res.witness.push_back(g.inv(total));
    std::sort(res.witness.begin(), res.witness.end());
    if (!is_irreducible_product_one(g, res.witness))
        fail(ErrorCode::ValidationFailure, "davenport witness failed the irreducibility check");
    return res;
}

AbelianGroupTable parse_abelian_spec(const std::string& spec) {
    std::vector<int> orders;
    size_t i = 0;
    while (i < spec.size()) {
        if (spec[i] == 'x' || spec[i] == 'X') {
            ++i;
            continue;
        }
        if (spec[i] != 'C' && spec[i] != 'c') fail(ErrorCode::ParseError, "expected 'C<n>' in group spec: " + spec);
        ++i;
        size_t j = i;
        while (j < spec.size() && isdigit(static_cast<unsigned char>(spec[j]))) ++j;
        if (j == i) fail(ErrorCode::ParseError, "missing order in group spec: " + spec);
        orders.push_back(std::stoi(spec.substr(i, j - i)));
        i = j;
    }
    if (orders.empty()) fail(ErrorCode::ParseError, "empty group spec");
    AbelianGroupTable g = AbelianGroupTable::cyclic(orders[0]);
    for (size_t k = 1; k < orders.size(); ++k) g = AbelianGroupTable::direct_product(g, AbelianGroupTable::cyclic(orders[k]));
    return g;
}

} // namespace invar
