#include "cycloschur/linalg.hpp"

#include <sstream>

namespace cycloschur {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("RationalMatrix: entry count does not match shape");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("RationalMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("RationalMatrix::from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    RationalMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
}

bool RationalMatrix::is_integral() const {
    for (const auto& x : data_)
        if (x.get_den() != 1) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
    RationalMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
        }
    return p;
}

RationalMatrix operator-(const RationalMatrix& a) {
    RationalMatrix out = a;
    for (auto& x : out.data_) x = -x;
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& x = a(i, j);
            if (sgn(x) == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = x * b(p, q);
        }
    return k;
}

Rational det_exact(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_exact: matrix is not square");
    const std::size_t n = m.rows();
    // Scale each row by the lcm of its denominators.
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c).get_num() * (l / m(r, c).get_den());
        scale *= l;
    }
    Rational det(bareiss_determinant(std::move(a), n), scale);
    det.canonicalize();
    return det;
}

namespace {

// Row echelon form over Q in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<std::vector<Rational>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && sgn(a[p][c]) == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[row], a[p]);
        const Rational inv = 1 / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || sgn(a[r][c]) == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = c; k < a[r].size(); ++k) a[r][k] -= f * a[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank_exact(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    return echelon(a, m.cols()).size();
}

RationalMatrix inverse_exact(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse_exact: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
        a[r][n + r] = 1;
    }
    if (echelon(a, n).size() != n) throw std::domain_error("inverse_exact: matrix is singular");
    RationalMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = a[r][n + c];
    return inv;
}

double log2_minor_bound(std::span<const std::vector<Integer>> rows) {
    double total = 0.0;
    for (const auto& row : rows) {
        double sq = 0.0;
        for (const auto& x : row) {
            const double v = x.get_d();
            sq += v * v;
        }
        if (sq > 1.0) total += 0.5 * std::log2(sq);
    }
    return total;
}

}  // namespace cycloschur
