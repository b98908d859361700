#include "invar/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace invar {

Config& config() {
    static Config cfg;
    return cfg;
}

// ---------------------------------------------------------------------------
// cyclotomic polynomials
// ---------------------------------------------------------------------------

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        BigInt c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) fail(ErrorCode::ValidationFailure, "cyclotomic polynomial division not exact");
    return quot;
}

std::map<int, std::vector<BigInt>>& cyclo_cache() {
    static std::map<int, std::vector<BigInt>> cache;
    return cache;
}

std::mutex cyclo_mutex;

// assumes lock held; fills the cache bottom-up over divisors
const std::vector<BigInt>& cyclotomic_locked(int n) {
    auto& cache = cyclo_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_divide_exact(std::move(num), cyclotomic_locked(d));
    }
    return cache.emplace(n, std::move(num)).first->second;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
    if (n < 1 || n > 10000) fail(ErrorCode::BadConductor, "conductor out of range: " + std::to_string(n));
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclotomic_locked(n);
}

// ---------------------------------------------------------------------------
// CycRat
// ---------------------------------------------------------------------------

CycRat::CycRat(int conductor, std::vector<Rat> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
    int phi = euler_phi(conductor_);
    if (static_cast<int>(coeffs_.size()) > phi) reduce_mod_cyclotomic(coeffs_);
    coeffs_.resize(phi, Rat(0));
}

CycRat CycRat::zeta(int n) {
    if (n < 1) fail(ErrorCode::BadConductor, "conductor must be positive");
    if (n == 1) return CycRat(Rat(1));
    if (n == 2) return CycRat(Rat(-1));
    std::vector<Rat> c(euler_phi(n), Rat(0));
    c[1] = 1;
    return CycRat(n, std::move(c));
}

void CycRat::reduce_mod_cyclotomic(std::vector<Rat>& c) const {
    const auto& phi = cyclotomic_polynomial(conductor_);
    int deg = static_cast<int>(phi.size()) - 1; // = euler_phi(conductor_)
    for (int i = static_cast<int>(c.size()) - 1; i >= deg; --i) {
        if (c[i] == 0) continue;
        Rat lead = c[i];
        c[i] = 0;
        for (int j = 0; j < deg; ++j) c[i - deg + j] -= lead * Rat(phi[j]);
    }
    c.resize(deg);
}

bool CycRat::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycRat::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycRat CycRat::embedded(int new_conductor) const {
    if (new_conductor == conductor_) return *this;
    if (new_conductor % conductor_ != 0)
        fail(ErrorCode::BadConductor, "conductor " + std::to_string(conductor_) + " does not divide " +
                                          std::to_string(new_conductor));
    int stride = new_conductor / conductor_;
    std::vector<Rat> c(static_cast<size_t>(euler_phi(conductor_)) * stride + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i * stride] = coeffs_[i];
    return CycRat(new_conductor, std::move(c));
}

CycRat CycRat::reduced_conductor() const {
    if (is_rational()) return CycRat(coeffs_[0]);
    for (int d = 1; d < conductor_; ++d) {
        if (conductor_ % d != 0) continue;
        // candidate: does the value lie in Q(zeta_d)?  Test by round-trip.
        int stride = conductor_ / d;
        bool in_sub = true;
        std::vector<Rat> sub(euler_phi(d), Rat(0));
        // Zeta_d embeds with stride; membership needs the reduced representative of
        // the element re-expressed over the subfield basis. Cheap test: embed each
        // subfield basis vector, solve?  Keep it simple: only handle exact stride
        // support (coefficients vanish off multiples of stride and fit phi(d)).
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (i % stride != 0 || static_cast<int>(i / stride) >= euler_phi(d)) {
                in_sub = false;
                break;
            }
            sub[i / stride] = coeffs_[i];
        }
        if (in_sub) {
            CycRat cand(d, sub);
            if (cand.embedded(conductor_) == *this) return cand;
        }
    }
    return *this;
}

CycRat CycRat::operator-() const {
    CycRat r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {
// unify conductors for a binary operation
void unify(const CycRat& a, const CycRat& b, CycRat& ua, CycRat& ub) {
    if (a.conductor() == b.conductor()) {
        ua = a;
        ub = b;
        return;
    }
    int n = std::lcm(a.conductor(), b.conductor());
    ua = a.embedded(n);
    ub = b.embedded(n);
}
} // namespace

CycRat CycRat::operator+(const CycRat& o) const {
    CycRat a, b;
    unify(*this, o, a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

CycRat CycRat::operator-(const CycRat& o) const {
    CycRat a, b;
    unify(*this, o, a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

CycRat CycRat::operator*(const CycRat& o) const {
    CycRat a, b;
    unify(*this, o, a, b);
    std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CycRat(a.conductor_, std::move(prod));
}

// Inverse by the extended Euclidean algorithm in Q[x] against Phi_n.
CycRat CycRat::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    if (is_rational()) return CycRat(conductor_, {Rat(1) / coeffs_[0]});

    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };

    const auto& phi_int = cyclotomic_polynomial(conductor_);
    Poly r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
    Poly r1 = coeffs_;
    Poly s0{Rat(0)}, s1{Rat(1)}; // s tracks the coefficient of *this

    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) fail(ErrorCode::NonInvertible, "element shares a factor with the cyclotomic polynomial");
        if (d1 == 0) {
            Rat c = r1[0];
            Poly out = s1;
            for (auto& v : out) v /= c;
            return CycRat(conductor_, std::move(out));
        }
        // r0 = q*r1 + r2
        Poly q(deg(r0) - d1 + 1 > 0 ? deg(r0) - d1 + 1 : 0, Rat(0));
        Poly r2 = r0;
        for (int i = deg(r0); i >= d1; --i) {
            if (r2[i] == 0) continue;
            Rat c = r2[i] / r1[d1];
            q[i - d1] = c;
            for (int j = 0; j <= d1; ++j) r2[i - d1 + j] -= c * r1[j];
        }
        // s2 = s0 - q*s1
        Poly s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

CycRat CycRat::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycRat base = *this;
    CycRat acc = CycRat::from_int(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool CycRat::operator==(const CycRat& o) const {
    if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
    CycRat a, b;
    unify(*this, o, a, b);
    return a.coeffs_ == b.coeffs_;
}

int CycRat::cmp(const CycRat& o) const {
    CycRat a, b;
    unify(*this, o, a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = rat_cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string CycRat::to_string() const {
    CycRat r = reduced_conductor();
    if (r.is_rational()) return rat_to_string(r.coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        const Rat& c = r.coeffs_[i];
        if (c == 0) continue;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        if (i == 0) {
            os << rat_to_string(abs);
            continue;
        }
        if (abs != 1) os << rat_to_string(abs) << "*";
        os << "z" << r.conductor_;
        if (i > 1) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// GF(q)
// ---------------------------------------------------------------------------

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// polynomial arithmetic over GF(p) with vectors of digits (ascending)
std::vector<int> gfp_poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& mod,
                                 int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    int k = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(prod.size()) - 1; i >= k; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < k; ++j) {
            prod[i - k + j] = ((prod[i - k + j] - c * mod[j]) % p + p * p) % p;
        }
    }
    prod.resize(k);
    return prod;
}

int digits_to_index(const std::vector<int>& digits, int p) {
    int idx = 0;
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) idx = idx * p + digits[i];
    return idx;
}

std::vector<int> index_to_digits(int idx, int p, int k) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = idx % p;
        idx /= p;
    }
    return d;
}

// Exhaustive irreducibility check: no monic factor of degree 1..k/2.
bool poly_irreducible(const std::vector<int>& poly, int p) {
    int k = static_cast<int>(poly.size()) - 1;
    if (k == 1) return true;
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int idx = 0; idx < count; ++idx) {
            std::vector<int> cand = index_to_digits(idx, p, d);
            cand.push_back(1); // monic degree d
            // trial division
            std::vector<int> rem(poly);
            for (int i = static_cast<int>(rem.size()) - 1; i >= d; --i) {
                int c = rem[i];
                if (c == 0) continue;
                rem[i] = 0;
                for (int j = 0; j < d; ++j) rem[i - d + j] = ((rem[i - d + j] - c * cand[j]) % p + p * p) % p;
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (rem[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

GFTable::GFTable(const GFSpec& spec) : spec_(spec) {
    if (!is_prime(spec_.p)) fail(ErrorCode::ValidationFailure, "GF characteristic must be prime");
    if (spec_.k < 1 || static_cast<int>(spec_.poly.size()) != spec_.k + 1)
        fail(ErrorCode::ValidationFailure, "bad GF modulus degree");
    long long q = 1;
    for (int i = 0; i < spec_.k; ++i) {
        q *= spec_.p;
        if (q > (1 << 16)) fail(ErrorCode::SizeGuard, "GF size exceeds 2^16");
    }
    q_ = static_cast<int>(q);
    for (auto& c : spec_.poly) c = ((c % spec_.p) + spec_.p) % spec_.p;
    if (spec_.poly.back() != 1) fail(ErrorCode::ValidationFailure, "GF modulus must be monic");
    if (!poly_irreducible(spec_.poly, spec_.p))
        fail(ErrorCode::ValidationFailure, "GF modulus polynomial is reducible");

    add_.resize(static_cast<size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a) {
        auto da = index_to_digits(a, spec_.p, spec_.k);
        for (int b = 0; b < q_; ++b) {
            auto db = index_to_digits(b, spec_.p, spec_.k);
            std::vector<int> s(spec_.k);
            for (int i = 0; i < spec_.k; ++i) s[i] = (da[i] + db[i]) % spec_.p;
            add_[static_cast<size_t>(a) * q_ + b] = digits_to_index(s, spec_.p);
        }
    }

    // smallest generator (by index) of the multiplicative group
    gen_ = -1;
    for (int g = 1; g < q_ && gen_ < 0; ++g) {
        std::vector<int> acc{1};
        acc.resize(spec_.k, 0);
        auto dg = index_to_digits(g, spec_.p, spec_.k);
        int order = 0;
        std::vector<int> cur = acc;
        do {
            cur = gfp_poly_mulmod(cur, dg, spec_.poly, spec_.p);
            ++order;
        } while (digits_to_index(cur, spec_.p) != 1 && order <= q_);
        if (order == q_ - 1) gen_ = g;
    }
    if (gen_ < 0) fail(ErrorCode::ValidationFailure, "no multiplicative generator found");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    std::vector<int> cur{1};
    cur.resize(spec_.k, 0);
    auto dg = index_to_digits(gen_, spec_.p, spec_.k);
    for (int i = 0; i < q_ - 1; ++i) {
        int idx = digits_to_index(cur, spec_.p);
        exp_[i] = idx;
        log_[idx] = i;
        cur = gfp_poly_mulmod(cur, dg, spec_.poly, spec_.p);
    }
    // sanity: exp/log mutually inverse
    for (int i = 0; i < q_ - 1; ++i)
        if (log_[exp_[i]] != i) fail(ErrorCode::ValidationFailure, "exp/log tables inconsistent");
}

int GFTable::add(int a, int b) const { return add_[static_cast<size_t>(a) * q_ + b]; }

int GFTable::neg(int a) const {
    auto d = index_to_digits(a, spec_.p, spec_.k);
    for (auto& x : d) x = (spec_.p - x) % spec_.p;
    return digits_to_index(d, spec_.p);
}

int GFTable::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

int GFTable::inv(int a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in GF(q)");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int GFTable::pow(int a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) fail(ErrorCode::DivisionByZero, "0^negative in GF(q)");
        return 0;
    }
    long long l = (log_[a] * (e % (q_ - 1))) % (q_ - 1);
    if (l < 0) l += q_ - 1;
    return exp_[l];
}

int GFTable::from_int(long long v) const {
    long long r = v % spec_.p;
    if (r < 0) r += spec_.p;
    return static_cast<int>(r);
}

int GFTable::element_order(int a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "order of zero");
    int l = log_[a];
    if (l == 0) return 1;
    return (q_ - 1) / std::gcd(q_ - 1, l);
}

int GFTable::log(int a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "log of zero");
    return log_[a];
}

namespace {
std::map<GFSpec, std::unique_ptr<GFTable>>& gf_registry() {
    static std::map<GFSpec, std::unique_ptr<GFTable>> reg;
    return reg;
}
std::mutex gf_mutex;
} // namespace

const GFTable* gf_table(const GFSpec& spec) {
    std::lock_guard<std::mutex> lock(gf_mutex);
    auto& reg = gf_registry();
    auto it = reg.find(spec);
    if (it == reg.end()) it = reg.emplace(spec, std::make_unique<GFTable>(spec)).first;
    return it->second.get();
}

const GFTable* gf_field(int p, int k) {
    // Conway polynomials for the fields the catalog actually exercises.
    if (p == 2 && k == 2) return gf_table(GFSpec{2, 2, {1, 1, 1}});
    if (p == 5 && k == 2) return gf_table(GFSpec{5, 2, {2, 4, 1}});
    if (k == 1) return gf_table(GFSpec{p, 1, {0, 1}});
    // first monic irreducible in index order
    for (int idx = 0;; ++idx) {
        std::vector<int> cand;
        int t = idx;
        for (int i = 0; i < k; ++i) {
            cand.push_back(t % p);
            t /= p;
        }
        if (t > 0) fail(ErrorCode::NoSuchRoot, "no irreducible polynomial found");
        cand.push_back(1);
        if (poly_irreducible(cand, p)) return gf_table(GFSpec{p, k, cand});
    }
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar Scalar::zero_like(const Scalar& s) {
    if (s.is_gf()) return Scalar(GFElem{s.gf_.field, 0});
    return Scalar::integer(0);
}

Scalar Scalar::one_like(const Scalar& s) {
    if (s.is_gf()) return Scalar(GFElem{s.gf_.field, 1});
    return Scalar::integer(1);
}

bool Scalar::is_zero() const { return kind_ == Kind::Cyc ? cyc_.is_zero() : gf_.value == 0; }

bool Scalar::is_one() const {
    if (kind_ == Kind::GF) return gf_.value == 1;
    return cyc_.is_rational() && cyc_.rational_value() == 1;
}

namespace {
[[noreturn]] void mixed_fields() { fail(ErrorCode::FieldMismatch, "mixed cyclotomic/GF(q) operands"); }
} // namespace

Scalar Scalar::operator-() const {
    if (kind_ == Kind::Cyc) return Scalar(-cyc_);
    return Scalar(GFElem{gf_.field, gf_.field->neg(gf_.value)});
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (kind_ != o.kind_) mixed_fields();
    if (kind_ == Kind::Cyc) return Scalar(cyc_ + o.cyc_);
    if (gf_.field != o.gf_.field) mixed_fields();
    return Scalar(GFElem{gf_.field, gf_.field->add(gf_.value, o.gf_.value)});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (kind_ != o.kind_) mixed_fields();
    if (kind_ == Kind::Cyc) return Scalar(cyc_ * o.cyc_);
    if (gf_.field != o.gf_.field) mixed_fields();
    return Scalar(GFElem{gf_.field, gf_.field->mul(gf_.value, o.gf_.value)});
}

Scalar Scalar::inverse() const {
    if (kind_ == Kind::Cyc) return Scalar(cyc_.inverse());
    return Scalar(GFElem{gf_.field, gf_.field->inv(gf_.value)});
}

Scalar Scalar::pow(long long e) const {
    if (kind_ == Kind::Cyc) return Scalar(cyc_.pow(e));
    return Scalar(GFElem{gf_.field, gf_.field->pow(gf_.value, e)});
}

bool Scalar::operator==(const Scalar& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::Cyc) return cyc_ == o.cyc_;
    return gf_ == o.gf_;
}

long long Scalar::multiplicative_order(long long bound) const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "order of zero");
    if (kind_ == Kind::GF) return gf_.field->element_order(gf_.value);
    Scalar acc = *this;
    for (long long k = 1; k <= bound; ++k) {
        if (acc.is_one()) return k;
        acc = acc * *this;
    }
    fail(ErrorCode::NoSuchRoot, "order exceeds bound (element may not be a root of unity)");
}

int Scalar::cmp(const Scalar& o) const {
    if (kind_ != o.kind_) return kind_ == Kind::Cyc ? -1 : 1;
    if (kind_ == Kind::Cyc) return cyc_.cmp(o.cyc_);
    if (gf_.field != o.gf_.field) {
        if (gf_.field->spec() < o.gf_.field->spec()) return -1;
        return 1;
    }
    if (gf_.value != o.gf_.value) return gf_.value < o.gf_.value ? -1 : 1;
    return 0;
}

std::string Scalar::to_string() const {
    if (kind_ == Kind::Cyc) return cyc_.to_string();
    std::ostringstream os;
    os << gf_.value << "#GF(" << gf_.field->q() << ")";
    return os.str();
}

Scalar root_of_unity_cyc(int m) { return Scalar::zeta(m); }

Scalar root_of_unity_gf(const GFTable* field, int m) {
    int q = field->q();
    if (m <= 0 || (q - 1) % m != 0)
        fail(ErrorCode::NoSuchRoot,
             "no element of order " + std::to_string(m) + " in GF(" + std::to_string(q) + ")");
    int r = field->pow(field->generator(), (q - 1) / m);
    return Scalar::gf(field, r);
}

CycRat embed(const CycRat& x, int new_conductor) { return x.embedded(new_conductor); }

GFElem reduce_to_gf(const CycRat& x, const GFTable* field) {
    int n = x.conductor();
    const int p = field->p();
    int root = 1;
    if (n > 1) {
        if ((field->q() - 1) % n != 0)
            fail(ErrorCode::NoSuchRoot, "GF(" + std::to_string(field->q()) + ") has no order-" + std::to_string(n) +
                                            " root for the reduction");
        root = root_of_unity_gf(field, n).gfe().value;
    }
    int acc = 0;
    int zpow = 1;
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        const Rat& c = x.coeffs()[i];
        if (c != 0) {
            BigInt num = rat_num(c) % p;
            BigInt den = rat_den(c) % p;
            if (den == 0) fail(ErrorCode::ModularCharacteristic, "denominator divisible by the characteristic");
            int ni = static_cast<int>((num + p) % p);
            int di = static_cast<int>((den + p) % p);
            int coeff = field->mul(field->from_int(ni), field->inv(field->from_int(di)));
            acc = field->add(acc, field->mul(coeff, zpow));
        }
        zpow = field->mul(zpow, root);
    }
    return GFElem{field, acc};
}

} // namespace invar
