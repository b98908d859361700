#include "invar/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace invar {

SparsePolynomial SparsePolynomial::variable(int nvars, int index, const Scalar& one) {
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    return SparsePolynomial(Monomial(std::move(e)), one);
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.deg;
    for (const auto& [m, c] : terms_)
        if (m.deg != d) return false;
    return true;
}

void SparsePolynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (nvars_ == 0) nvars_ = m.nvars();
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r += o;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r += -o;
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    SparsePolynomial r(nvars_ ? nvars_ : o.nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const Scalar& c) const {
    SparsePolynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

SparsePolynomial SparsePolynomial::pow(int e) const {
    if (e < 0) fail(ErrorCode::ValidationFailure, "negative power of a polynomial");
    SparsePolynomial acc(nvars_);
    Scalar one = terms_.empty() ? Scalar::integer(1) : Scalar::one_like(terms_.begin()->second);
    acc.add_term(Monomial::one(nvars_), one);
    SparsePolynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar SparsePolynomial::evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        fail(ErrorCode::DimensionMismatch, "evaluation point has wrong dimension");
    // power cache per variable
    std::vector<std::vector<Scalar>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(Scalar::one_like(point.empty() ? Scalar() : point[i]));
    Scalar acc = Scalar::integer(0);
    bool acc_set = false;
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (int i = 0; i < nvars_; ++i) {
            int e = m.e[i];
            if (e == 0) continue;
            auto& pv = pows[i];
            while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * point[i]);
            t = t * pv[e];
        }
        if (!acc_set) {
            acc = t;
            acc_set = true;
        } else {
            acc += t;
        }
    }
    if (!acc_set) {
        // zero polynomial: produce the right field's zero
        return point.empty() ? Scalar::integer(0) : Scalar::zero_like(point[0]);
    }
    return acc;
}

std::vector<Scalar> SparsePolynomial::coefficient_row(const std::vector<Monomial>& basis, const Scalar& zero) const {
    std::vector<Scalar> row(basis.size(), zero);
    size_t hits = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = terms_.find(basis[i]);
        if (it != terms_.end()) {
            row[i] = it->second;
            ++hits;
        }
    }
    if (hits != terms_.size()) fail(ErrorCode::ValidationFailure, "polynomial has terms outside the monomial basis");
    return row;
}

std::string SparsePolynomial::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        first = false;
        if (neg) cs = cs.substr(1);
        bool needs_paren = cs.find(' ') != std::string::npos;
        bool coef_is_one = (cs == "1");
        bool printed = false;
        if (!coef_is_one || m.is_one()) {
            if (needs_paren)
                os << "(" << cs << ")";
            else
                os << cs;
            printed = true;
        }
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed) os << "*";
            os << var_names[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
            printed = true;
        }
    }
    return os.str();
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    if (d < 0) fail(ErrorCode::ValidationFailure, "negative degree");
    // count = C(d + nvars - 1, nvars - 1)
    unsigned long long count = 1;
    for (int i = 1; i < nvars; ++i) {
        count = count * (d + i) / i;
        if (count > config().monomial_guard)
            fail(ErrorCode::SizeGuardExceeded, "monomial enumeration exceeds the size guard");
    }
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<int> e(nvars, 0);
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial::one(0));
        return out;
    }
    e[0] = d;
    while (true) {
        out.push_back(Monomial(e));
        // next composition: move one unit from the leftmost positive pile (classic
        // colex walk); terminates when everything sits in the last variable
        int i = 0;
        while (i < nvars && e[i] == 0) ++i;
        if (i >= nvars - 1) break;
        int v = e[i];
        e[i] = 0;
        e[i + 1] += 1;
        e[0] = v - 1;
    }
    std::sort(out.begin(), out.end(), GrevlexGreater());
    return out;
}

} // namespace invar
