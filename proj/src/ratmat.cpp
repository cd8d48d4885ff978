#include "segkl/ratmat.hpp"

#include <stdexcept>

namespace segkl {

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

Mat mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
  Mat z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x.a[i][k] == 0) continue;
      for (size_t j = 0; j < y.cols; ++j)
        z.a[i][j] += x.a[i][k] * y.a[k][j];
    }
  return z;
}

size_t rank(Mat m) {
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t piv = r;
    while (piv < m.rows && m.a[piv][c] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(m.a[piv], m.a[r]);
    for (size_t i = r + 1; i < m.rows; ++i) {
      if (m.a[i][c] == 0) continue;
      Rat f(m.a[i][c] / m.a[r][c]);
      for (size_t j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
    }
    ++r;
  }
  return r;
}

Mat inverse(const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  size_t n = m.rows;
  Mat w = m;
  Mat inv = Mat::identity(n);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && w.a[piv][c] == 0) ++piv;
    if (piv == n) throw std::runtime_error("inverse: singular matrix");
    std::swap(w.a[piv], w.a[c]);
    std::swap(inv.a[piv], inv.a[c]);
    Rat d(w.a[c][c]);
    for (size_t j = 0; j < n; ++j) {
      w.a[c][j] /= d;
      inv.a[c][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || w.a[i][c] == 0) continue;
      Rat f(w.a[i][c]);
      for (size_t j = 0; j < n; ++j) {
        w.a[i][j] -= f * w.a[c][j];
        inv.a[i][j] -= f * inv.a[c][j];
      }
    }
  }
  return inv;
}

Mat transpose(const Mat& m) {
  Mat t(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) t.a[j][i] = m.a[i][j];
  return t;
}

}  // namespace segkl
