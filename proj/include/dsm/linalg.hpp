#pragma once

#include <vector>

#include "dsm/errors.hpp"
#include "dsm/rational.hpp"

namespace dsm {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major, rectangular

inline Mat identity_matrix(std::size_t n) {
  Mat m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  Mat out(a.size(), Vec(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec vec_scale(const Rational& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Rational determinant(Mat m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}

inline std::size_t matrix_rank(Mat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[row][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Exact Gaussian elimination; throws Singular when the system has no
// unique solution.
inline Vec solve_linear(Mat a, Vec b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) fail_inconsistency("Singular", "singular linear system");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace dsm
