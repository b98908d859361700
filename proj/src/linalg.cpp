#include "invar/linalg.hpp"

#include <algorithm>

namespace invar {

namespace {

int first_nonzero(const std::vector<Scalar>& row) {
    for (size_t i = 0; i < row.size(); ++i)
        if (!row[i].is_zero()) return static_cast<int>(i);
    return -1;
}

} // namespace

// Multiply a cyclotomic row by the lcm of all denominators, then divide out the
// integer content. No-op for GF rows.
void RowSpace::clear_content(std::vector<Scalar>& row) {
    bool cyc = false;
    for (const auto& s : row) {
        if (!s.is_zero()) {
            cyc = s.is_cyclotomic();
            break;
        }
    }
    if (!cyc) return;
    BigInt den_lcm = 1;
    for (const auto& s : row) {
        if (s.is_zero()) continue;
        for (const auto& c : s.cyc().coeffs())
            if (c != 0) den_lcm = big_lcm(den_lcm, rat_den(c));
    }
    BigInt content = 0;
    for (const auto& s : row) {
        if (s.is_zero()) continue;
        for (const auto& c : s.cyc().coeffs())
            if (c != 0) content = big_gcd(content, boost::multiprecision::abs(rat_num(c) * (den_lcm / rat_den(c))));
    }
    if (content == 0) return;
    Rat factor = Rat(den_lcm) / Rat(content);
    if (factor == 1) return;
    Scalar f = Scalar::rational(factor);
    for (auto& s : row)
        if (!s.is_zero()) s = s * f;
}

void RowSpace::eliminate(std::vector<Scalar>& row, const std::vector<Scalar>& pivot_row, int col) const {
    if (row[col].is_zero()) return;
    if (row[col].is_gf()) {
        // pivot rows over GF are stored with pivot coefficient 1
        Scalar c = row[col];
        for (size_t i = col; i < ncols_; ++i) {
            if (pivot_row[i].is_zero()) continue;
            row[i] = row[i] - c * pivot_row[i];
        }
        return;
    }
    Scalar a = pivot_row[col];
    Scalar b = row[col];
    for (size_t i = 0; i < ncols_; ++i) {
        Scalar t = row[i] * a - pivot_row[i] * b;
        row[i] = t;
    }
}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> row) const {
    if (row.size() != ncols_) fail(ErrorCode::DimensionMismatch, "row width mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        int col = pivots_[r];
        if (!row[col].is_zero()) {
            bool cyc = row[col].is_cyclotomic();
            eliminate(row, rows_[r], col);
            if (cyc) clear_content(row); // keeps the fraction-free entries small
        }
    }
    return row;
}

bool RowSpace::insert(std::vector<Scalar> row) {
    row = reduce(std::move(row));
    int col = first_nonzero(row);
    if (col < 0) return false;
    if (row[col].is_gf()) {
        Scalar inv = row[col].inverse();
        for (auto& s : row)
            if (!s.is_zero()) s = s * inv;
    } else {
        clear_content(row);
    }
    // keep rows ordered by pivot column
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), col);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, col);
    rows_.insert(rows_.begin() + idx, std::move(row));
    return true;
}

bool RowSpace::contains(const std::vector<Scalar>& row) const { return row_is_zero(reduce(row)); }

std::vector<std::vector<Scalar>> RowSpace::rref() const {
    std::vector<std::vector<Scalar>> out = rows_;
    // eliminate above each pivot, last pivot first
    for (int r = static_cast<int>(out.size()) - 1; r >= 0; --r) {
        int col = pivots_[r];
        for (int s = 0; s < r; ++s) {
            if (!out[s][col].is_zero()) {
                if (out[s][col].is_gf()) {
                    Scalar c = out[s][col];
                    for (size_t i = 0; i < ncols_; ++i)
                        if (!out[r][i].is_zero()) out[s][i] = out[s][i] - c * out[r][i];
                } else {
                    Scalar a = out[r][col];
                    Scalar b = out[s][col];
                    for (size_t i = 0; i < ncols_; ++i) out[s][i] = out[s][i] * a - out[r][i] * b;
                    clear_content(out[s]);
                }
            }
        }
    }
    // normalize pivots to 1
    for (size_t r = 0; r < out.size(); ++r) {
        Scalar inv = out[r][pivots_[r]].inverse();
        if (!inv.is_one())
            for (auto& s : out[r])
                if (!s.is_zero()) s = s * inv;
    }
    return out;
}

} // namespace invar
