#include "segkl/vogan.hpp"

#include <stdexcept>

namespace segkl {

long dim_ambient(const WeightFunction& phi) {
  long d = 0;
  for (const auto& [p, c] : phi.v) d += c * phi(Rat(p + 1));
  return d;
}

GradedOperator jordan_rep(const Multisegment& m) {
  GradedOperator T;
  T.dims = weight_of(m);
  std::map<Rat, long> next;
  // coordinate of each segment in each degree it covers
  std::vector<std::map<Rat, long>> coord(m.segs.size());
  for (size_t s = 0; s < m.segs.size(); ++s)
    for (Rat p = m.segs[s].a; p <= m.segs[s].b; p += 1)
      coord[s][p] = next[p]++;
  for (const auto& [p, dim] : T.dims.v) {
    long dnext = T.dims(Rat(p + 1));
    if (dnext == 0) continue;
    Mat blk(static_cast<size_t>(dnext), static_cast<size_t>(dim));
    for (size_t s = 0; s < m.segs.size(); ++s) {
      if (m.segs[s].a <= p && Rat(p + 1) <= m.segs[s].b)
        blk.at(static_cast<size_t>(coord[s][Rat(p + 1)]),
               static_cast<size_t>(coord[s][p])) = 1;
    }
    T.blocks[p] = std::move(blk);
  }
  return T;
}

namespace {

// Rank of the composite V_i -> V_j; zero when the chain leaves the support.
long composite_rank(const GradedOperator& T, const Rat& i, const Rat& j) {
  for (Rat p = i; p <= j; p += 1)
    if (T.dims(p) == 0) return 0;
  if (i == j) return T.dims(i);
  Mat acc = T.blocks.at(i);
  for (Rat p = i + 1; p < j; p += 1) acc = mul(T.blocks.at(p), acc);
  return static_cast<long>(rank(acc));
}

}  // namespace

Multisegment jordan_type(const GradedOperator& T) {
  std::vector<Rat> supp = T.dims.support();
  std::vector<Segment> segs;
  std::map<std::pair<Rat, Rat>, long> memo;
  auto R = [&](const Rat& i, const Rat& j) -> long {
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long r = composite_rank(T, i, j);
    memo[key] = r;
    return r;
  };
  /* Cells covering [i,j] are counted by the rank of V_i -> V_j; the count
   * of cells exactly [i,j] follows by inclusion-exclusion on both ends. */
  for (const Rat& i : supp)
    for (const Rat& j : supp) {
      if (j < i || !is_integer(Rat(j - i))) continue;
      long c = R(i, j) - R(Rat(i - 1), j) - R(i, Rat(j + 1)) + R(Rat(i - 1), Rat(j + 1));
      for (long t = 0; t < c; ++t) segs.emplace_back(i, j);
    }
  return Multisegment::of(std::move(segs));
}

long orbit_dimension(const Multisegment& m) {
  GradedOperator T = jordan_rep(m);
  std::vector<Rat> supp = T.dims.support();
  // column offsets for the unknowns g_p
  std::map<Rat, size_t> off;
  size_t ncols = 0;
  for (const Rat& p : supp) {
    off[p] = ncols;
    ncols += static_cast<size_t>(T.dims(p)) * static_cast<size_t>(T.dims(p));
  }
  size_t nrows = 0;
  for (const auto& [p, blk] : T.blocks) nrows += blk.rows * blk.cols;
  Mat M(nrows, ncols);
  size_t row0 = 0;
  for (const auto& [p, blk] : T.blocks) {
    size_t dp = blk.cols, dq = blk.rows;  // dims of V_p and V_{p+1}
    // equation (r,c): sum_k g_{p+1}[r][k] T[k][c] - sum_k T[r][k] g_p[k][c] = 0
    for (size_t r = 0; r < dq; ++r)
      for (size_t c = 0; c < dp; ++c) {
        size_t row = row0 + r * dp + c;
        for (size_t k = 0; k < dq; ++k)
          M.at(row, off[Rat(p + 1)] + r * dq + k) += blk.at(k, c);
        for (size_t k = 0; k < dp; ++k)
          M.at(row, off[p] + k * dp + c) -= blk.at(r, k);
      }
    row0 += dq * dp;
  }
  return static_cast<long>(rank(std::move(M)));
}

bool is_full_rank(const Multisegment& m) {
  auto data = assumption_r(weight_of(m));
  if (!data)
    throw std::domain_error("is_full_rank: weight fails the unimodality assumption");
  for (const RDatum& d : *data) {
    long count = 0;
    for (const Segment& s : m.segs)
      if (d.piece.lo <= s.a && s.b <= d.piece.hi && s.same_coset(Segment(d.piece.lo, d.piece.lo)))
        ++count;
    if (count != d.n) return false;
  }
  return true;
}

}  // namespace segkl
