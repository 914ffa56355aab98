// Dense exact matrices: rank over a field, fraction-free (Bareiss) rank and
// determinant over an integral domain with exact division.
#ifndef PENCIL_MATRIX_HPP
#define PENCIL_MATRIX_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "pencil/ring.hpp"

namespace pencil {

template <class K>
class Matrix {
  public:
    Matrix(size_t rows, size_t cols, const K& zero)
        : rows_(rows), cols_(cols), data_(rows * cols, zero), sample_(zero) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const K& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    K& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const K& sample() const { return sample_; }

    Matrix<K> submatrix(const std::vector<size_t>& rws, const std::vector<size_t>& cls) const {
        Matrix<K> s(rws.size(), cls.size(), zero_like(sample_));
        for (size_t i = 0; i < rws.size(); ++i)
            for (size_t j = 0; j < cls.size(); ++j) s.at(i, j) = at(rws[i], cls[j]);
        return s;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const K&>()))> {
        using K2 = decltype(f(std::declval<const K&>()));
        Matrix<K2> m(rows_, cols_, f(zero_like(sample_)));
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) m.at(r, c) = f(at(r, c));
        return m;
    }

  private:
    size_t rows_, cols_;
    std::vector<K> data_;
    K sample_;
};

/// Exact rank by Gaussian elimination over a field; records pivot rows if asked.
template <class K>
size_t rank_gauss(Matrix<K> m, std::vector<size_t>* pivot_rows = nullptr) {
    static_assert(is_field_v<K>, "rank_gauss needs a field");
    size_t rank = 0;
    std::vector<size_t> row_of(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) row_of[i] = i;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t piv = rank;
        while (piv < m.rows() && is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(piv, c));
        std::swap(row_of[rank], row_of[piv]);
        K pinv = field_inv(m.at(rank, col));
        for (size_t r = rank + 1; r < m.rows(); ++r) {
            if (is_zero(m.at(r, col))) continue;
            K factor = m.at(r, col) * pinv;
            for (size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = m.at(r, c) - factor * m.at(rank, c);
        }
        if (pivot_rows) pivot_rows->push_back(row_of[rank]);
        ++rank;
    }
    return rank;
}

/// Fraction-free elimination over an integral domain; exact_div(a, b) must be
/// the exact quotient. Returns the rank; the divisions Bareiss performs are
/// exact by construction.
template <class K, class ExactDiv>
size_t rank_bareiss(Matrix<K> m, ExactDiv&& div, std::vector<size_t>* pivot_rows = nullptr) {
    size_t rank = 0;
    K prev = one_like(m.sample());
    std::vector<size_t> row_of(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) row_of[i] = i;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t piv = rank;
        while (piv < m.rows() && is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(piv, c));
        std::swap(row_of[rank], row_of[piv]);
        const K pivot = m.at(rank, col);
        for (size_t r = rank + 1; r < m.rows(); ++r) {
            for (size_t c = col + 1; c < m.cols(); ++c)
                m.at(r, c) = div(m.at(r, c) * pivot - m.at(r, col) * m.at(rank, c), prev);
            m.at(r, col) = zero_like(m.sample());
        }
        prev = pivot;
        if (pivot_rows) pivot_rows->push_back(row_of[rank]);
        ++rank;
    }
    return rank;
}

/// Bareiss determinant of a square matrix over an integral domain.
template <class K, class ExactDiv>
K det_bareiss(Matrix<K> m, ExactDiv&& div) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const size_t n = m.rows();
    if (n == 0) return one_like(m.sample());
    K prev = one_like(m.sample());
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && is_zero(m.at(piv, k))) ++piv;
        if (piv == n) return zero_like(m.sample());
        if (piv != k) {
            for (size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            sign = -sign;
        }
        const K pivot = m.at(k, k);
        for (size_t r = k + 1; r < n; ++r) {
            for (size_t c = k + 1; c < n; ++c)
                m.at(r, c) = div(m.at(r, c) * pivot - m.at(r, k) * m.at(k, c), prev);
            m.at(r, k) = zero_like(m.sample());
        }
        prev = pivot;
    }
    K d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

/// Determinant over a field by Gaussian elimination.
template <class K>
K det_gauss(Matrix<K> m) {
    static_assert(is_field_v<K>, "det_gauss needs a field");
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const size_t n = m.rows();
    K det = one_like(m.sample());
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && is_zero(m.at(piv, k))) ++piv;
        if (piv == n) return zero_like(m.sample());
        if (piv != k) {
            for (size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            det = -det;
        }
        det = det * m.at(k, k);
        K pinv = field_inv(m.at(k, k));
        for (size_t r = k + 1; r < n; ++r) {
            if (is_zero(m.at(r, k))) continue;
            K factor = m.at(r, k) * pinv;
            for (size_t c = k; c < n; ++c) m.at(r, c) = m.at(r, c) - factor * m.at(k, c);
        }
    }
    return det;
}

/// Exact rank of a matrix over an exact field (Q, F_p, or a fraction field of
/// a polynomial ring). Over Q this clears denominators row by row and runs
/// fraction-free elimination on the integer matrix.
size_t rank_over_field(const Matrix<Rational>& m, std::vector<size_t>* pivot_rows = nullptr);

template <class K>
size_t rank_over_field(const Matrix<K>& m, std::vector<size_t>* pivot_rows = nullptr) {
    return rank_gauss(m, pivot_rows);
}

/// Rank of an integer matrix (over Q) via Bareiss.
inline size_t rank_int(const Matrix<BigInt>& m, std::vector<size_t>* pivot_rows = nullptr) {
    return rank_bareiss(m, [](const BigInt& a, const BigInt& b) { return exact_div(a, b); },
                        pivot_rows);
}

inline Matrix<BigInt> clear_row_denominators(const Matrix<Rational>& m) {
    Matrix<BigInt> z(m.rows(), m.cols(), BigInt(0));
    for (size_t r = 0; r < m.rows(); ++r) {
        BigInt l = 1;
        for (size_t c = 0; c < m.cols(); ++c) l = lcm(l, m.at(r, c).den());
        for (size_t c = 0; c < m.cols(); ++c) {
            const Rational v = m.at(r, c) * Rational(l);
            z.at(r, c) = v.num();  // denominator is 1 by construction
        }
    }
    return z;
}

inline size_t rank_over_field(const Matrix<Rational>& m, std::vector<size_t>* pivot_rows) {
    return rank_int(clear_row_denominators(m), pivot_rows);
}

}  // namespace pencil

#endif
