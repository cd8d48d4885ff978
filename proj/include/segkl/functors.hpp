#pragma once

#include <string>
#include <vector>

#include "segkl/comparison.hpp"
#include "segkl/kgroup.hpp"

namespace segkl {

/* A translation datum moves one coordinate line of a block between facets:
 * dst = src + delta * indicator(idx) with both ends weakly decreasing.
 * For |delta| > 1 every intermediate step past the first must stay in one
 * facet, so the functor only sees the two stabilizers.  run_decrement is
 * the special case lowering a suffix of a constant run by one, the shape
 * used against derivatives. */
struct TranslationDatum {
  enum class Coord { L, R };
  Coord coord = Coord::L;
  std::vector<Rat> src, dst;
  std::vector<int> idx;  // 1-based, strictly increasing
  int delta = -1;

  static TranslationDatum run_decrement(const std::vector<Rat>& lam, int j, int c,
                                        Coord coord = Coord::L);
  static TranslationDatum shift(const std::vector<Rat>& lam, std::vector<int> idx,
                                int delta, Coord coord = Coord::L);
  TranslationDatum reversed() const;  // swap src and dst
};

// Target block of a datum applied to a source block.
RealBlock translated_block(const TranslationDatum& d, const RealBlock& src);

/* Translation functor on standards:
 *   T X(lamL, w lamR) = sum over s in W(src)/W(src) cap W(dst) of
 *                       X(dst, s^{-1} w lamR)        (L-coordinate datum)
 * and the mirrored right-multiplication for an R-coordinate datum. */
KElement translate(const TranslationDatum& d, const RealBlock& src,
                   const KElement& realStd);

/* Push-pull functor on the dual sheaf side, from the target block's sheaf
 * basis back to the source block's.  Computed two independent ways, the
 * adjunction against translate and the orbit-by-orbit sign bookkeeping
 * through the correspondence space, and the two must agree. */
KElement pushpull(const TranslationDatum& d, const RealBlock& src,
                  const KElement& sheafStd, KLContext& ctx);

/* Checks that translation through lamSecond factors the one-step
 * translation lam -> lamPrime on every standard of the block; lamSecond
 * only matters through its facet, which must cut out exactly
 * W(lam) cap W(lamPrime). */
bool factor_check(const std::vector<Rat>& lam, const std::vector<Rat>& lamPrime,
                  const std::vector<Rat>& lamSecond);

/* Wall-and-back identity: translating a regular block to the wall with
 * stabilizer W_J and back multiplies, on every standard, into the sum of
 * the coherent-continuation actions of W_J. */
bool composed_translation_identity(int n, const ParabSet& J);

struct DiagramRow {
  Perm label;
  KElement lhs, rhs;
  bool ok = false;
};

struct DiagramReport {
  bool ok = false;
  std::string note;
  WeightFunction phi, psi;
  std::vector<DiagramRow> rows;
};

/* Verifies, label by label, that the derivative of degree k followed by
 * projection to psi = phi - c[k] agrees with translation followed by the
 * matching of standards, on the whole block of phi.  Degrees right of the
 * center are checked directly; degrees left of it reduce to the mirrored
 * weight by endpoint reflection. */
DiagramReport verify_main_diagram(const WeightFunction& phi, long c, const Rat& k,
                                  const Rat& eL = half(), const Rat& eR = -half(),
                                  int threads = 1);

/* Every (c, k) the diagram applies to: k runs over the support avoiding
 * each piece's central pair, and c over 1 .. the drop of phi at k on the
 * side away from the center.  Empty when the unimodality assumption
 * fails. */
std::vector<std::pair<long, Rat>> admissible_diagram_cases(const WeightFunction& phi);

}  // namespace segkl
