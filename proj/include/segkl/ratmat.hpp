#pragma once

#include <vector>

#include "segkl/rational.hpp"

namespace segkl {

// Dense matrix over Q with exact elimination; sized for desk-scale blocks.
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<std::vector<Rat>> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r, std::vector<Rat>(c, Rat(0))) {}
  static Mat identity(size_t n);

  Rat& at(size_t i, size_t j) { return a[i][j]; }
  const Rat& at(size_t i, size_t j) const { return a[i][j]; }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mul(const Mat& x, const Mat& y);
size_t rank(Mat m);                 // destructive Gauss on a copy
Mat inverse(const Mat& m);          // throws on singular input
Mat transpose(const Mat& m);

}  // namespace segkl
