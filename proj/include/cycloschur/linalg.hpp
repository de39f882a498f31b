#pragma once

// Exact matrices and fraction-free (Bareiss) determinants.

#include "cycloschur/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycloschur {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);
    /// Matrix whose j-th column is columns[j]; every column must have length `rows`.
    static RationalMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::vector<Rational> column(std::size_t c) const;
    [[nodiscard]] RationalMatrix transpose() const;
    [[nodiscard]] RationalMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
    [[nodiscard]] bool is_integral() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Kronecker product a (x) b.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Exact determinant by fraction-free elimination. Rows are scaled to clear
/// denominators, so the elimination itself runs over the integers. Pivot rule:
/// the first nonzero entry of the remaining block in row-major order.
Rational det_exact(const RationalMatrix& m);

/// Rank over Q.
std::size_t rank_exact(const RationalMatrix& m);

/// Inverse over Q; throws std::domain_error when singular.
RationalMatrix inverse_exact(const RationalMatrix& m);

namespace detail {

// Exact quotient for the Bareiss update, specialised so mpz uses divexact.
inline void div_exact(Integer& a, const Integer& b) { mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
inline void div_exact(std::int64_t& a, std::int64_t b) { a /= b; }
inline void div_exact(Rational& a, const Rational& b) { a /= b; }

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(std::int64_t a) { return a == 0; }

}  // namespace detail

/// Bareiss determinant of the n x n row-major matrix `a` (destroyed).
/// Pivot rule: first nonzero entry of the trailing block in row-major order;
/// the pivot is moved into place by one row swap and one column swap.
template <class T>
T bareiss_determinant(std::vector<T> a, std::size_t n) {
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = n, pc = n;
        for (std::size_t r = k; r < n && pr == n; ++r)
            for (std::size_t c = k; c < n; ++c)
                if (!detail::is_zero(a[r * n + c])) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == n) return T(0);
        if (pr != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[pr * n + c]);
            negate = !negate;
        }
        if (pc != k) {
            for (std::size_t r = 0; r < n; ++r) std::swap(a[r * n + k], a[r * n + pc]);
            negate = !negate;
        }
        const T pivot = a[k * n + k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const T lead = a[r * n + k];
            for (std::size_t c = k + 1; c < n; ++c) {
                T& x = a[r * n + c];
                x = pivot * x - lead * a[k * n + c];
                detail::div_exact(x, prev);
            }
        }
        prev = pivot;
    }
    T det = a[n * n - 1];
    if (negate) det = -det;
    return det;
}

/// log2 of a Hadamard-type bound on every minor formed from the given rows:
/// the product of max(1, ||row||_2) over all rows.
double log2_minor_bound(std::span<const std::vector<Integer>> rows);

/// True when every Bareiss intermediate (a product of two minors plus the
/// difference) fits in a signed 64-bit integer.
inline bool fits_int64_bareiss(double log2_bound) { return 2.0 * log2_bound + 2.0 < 62.0; }

/// Row-by-row fraction-free elimination over a fixed number of columns.
///
/// Rows are pushed one at a time; each push reduces the new row against the
/// stored pivot rows (Bareiss update) and selects as pivot the first nonzero
/// remaining column. A row that reduces to zero is rejected, which means the
/// rows pushed so far plus that row are linearly dependent. After `cols` rows
/// have been accepted, determinant() is the determinant of the stacked rows.
/// pop() undoes the most recent push, so the structure supports depth-first
/// enumeration with shared prefixes.
template <class T>
class IncrementalBareiss {
public:
    explicit IncrementalBareiss(std::size_t cols) : cols_(cols), perm_(cols), scratch_(cols) {
        for (std::size_t i = 0; i < cols; ++i) perm_[i] = i;
        rows_.reserve(cols);
        pivots_.reserve(cols);
        swaps_.reserve(cols);
    }

    [[nodiscard]] std::size_t depth() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    /// Returns false (and leaves the state unchanged) if the row is dependent.
    bool push(std::span<const T> row) {
        const std::size_t k = rows_.size();
        if (k >= cols_) throw std::logic_error("IncrementalBareiss::push: already full");
        std::vector<T>& r = scratch_;
        std::copy(row.begin(), row.end(), r.begin());
        for (std::size_t t = 0; t < k; ++t) {
            const T& piv = pivots_[t];
            const std::vector<T>& pr = rows_[t];
            const T lead = r[perm_[t]];
            for (std::size_t s = t + 1; s < cols_; ++s) {
                const std::size_t j = perm_[s];
                T& x = r[j];
                x = piv * x - lead * pr[j];
                if (t > 0) detail::div_exact(x, pivots_[t - 1]);
            }
        }
        std::size_t found = cols_;
        for (std::size_t s = k; s < cols_; ++s)
            if (!detail::is_zero(r[perm_[s]])) {
                found = s;
                break;
            }
        if (found == cols_) return false;
        std::swap(perm_[k], perm_[found]);
        swaps_.push_back(found);
        if (found != k) negate_ = !negate_;
        pivots_.push_back(r[perm_[k]]);
        rows_.push_back(r);
        return true;
    }

    void pop() {
        const std::size_t k = rows_.size() - 1;
        const std::size_t found = swaps_.back();
        swaps_.pop_back();
        std::swap(perm_[k], perm_[found]);
        if (found != k) negate_ = !negate_;
        rows_.pop_back();
        pivots_.pop_back();
    }

    /// Determinant of the stacked rows; requires depth() == cols().
    [[nodiscard]] T determinant() const {
        if (rows_.size() != cols_) throw std::logic_error("IncrementalBareiss::determinant: not full");
        if (cols_ == 0) return T(1);
        T det = pivots_.back();
        if (negate_) det = -det;
        return det;
    }

private:
    std::size_t cols_;
    std::vector<std::size_t> perm_;
    std::vector<std::vector<T>> rows_;
    std::vector<T> pivots_;
    std::vector<std::size_t> swaps_;
    std::vector<T> scratch_;
    bool negate_ = false;
};

}  // namespace cycloschur
