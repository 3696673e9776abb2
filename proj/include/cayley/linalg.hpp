#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cayley {

/// Dense matrix over an exact field (Rational or QuadExt). Row-major.
template <typename F>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Mat&, const Mat&) = default;

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& a = (*this)(i, k);
        if (a == F(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    Mat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }

  Mat operator-(const Mat& o) const {
    Mat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }

  Mat transposed() const {
    Mat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!(v == F(0))) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Reduced row echelon form in place; returns pivot column per pivot row.
template <typename F>
std::vector<std::size_t> rref(Mat<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == F(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == F(0)) continue;
      const F f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
std::size_t rank(Mat<F> m) {
  return rref(m).size();
}

template <typename F>
F determinant(Mat<F> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  F det(1);
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t p = col;
    while (p < m.rows() && m(p, col) == F(0)) ++p;
    if (p == m.rows()) return F(0);
    if (p != col) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    const F inv = F(1) / m(col, col);
    for (std::size_t i = col + 1; i < m.rows(); ++i) {
      if (m(i, col) == F(0)) continue;
      const F f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

template <typename F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Mat<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Solves A x = b exactly. Requires a consistent system with full column
/// rank (unique solution); returns nullopt when the system is inconsistent
/// or underdetermined.
template <typename F>
std::optional<std::vector<F>> solve(const Mat<F>& a, const std::vector<F>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
  Mat<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != a.cols()) return std::nullopt;                     // underdetermined
  std::vector<F> x(a.cols(), F(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

/// Basis of the right null space of A, one vector per non-pivot column.
template <typename F>
std::vector<std::vector<F>> nullspace(Mat<F> a) {
  const std::size_t n = a.cols();
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(n, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace cayley
