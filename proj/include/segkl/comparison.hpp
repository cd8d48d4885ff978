#pragma once

#include <map>
#include <utility>
#include <vector>

#include "segkl/kgroup.hpp"
#include "segkl/multisegment.hpp"

namespace segkl {

Composition tau_composition(Composition c);            // reverse
std::vector<Rat> tau_coordinates(std::vector<Rat> v);  // negate and reverse

/* The two parabolic types attached to a unimodal weight on one coordinate
 * line: block sizes of the increments up to r - 1/2 (ascending degree) and
 * of the decrements down to r + 1/2 (descending degree), zero blocks
 * dropped, both in upper-triangular normalization. */
std::pair<Composition, Composition> parabolics_from_weight(const WeightFunction& phi);

/* Infinitesimal character of the block attached to phi: order the open
 * orbit's nested segments [a_i, b_i] with larger right endpoints first;
 * lamL = (b_i + eL) descending, lamR = (a_i + eR) with the a_i descending,
 * so that coordinate i of lamR pairs the shortest segment with the longest. */
std::pair<std::vector<Rat>, std::vector<Rat>> infchar_from_weight(
    const WeightFunction& phi, const Rat& eL, const Rat& eR);

/* One matched block: a weight phi on a single coordinate line satisfying
 * the unimodality assumption, its parameter block (lamL, lamR), and the
 * bijection w -> bm(w) = sum_i [ (w lamR)_i + 1/2, lamL_i - 1/2 ] between
 * double-coset labels and full-rank orbits. */
struct ComparisonBlock {
  WeightFunction phi;
  Rat r;
  long n = 0;
  std::vector<Rat> lamL, lamR;
  RealBlock real;
  std::vector<Perm> labels;                  // rep labels
  std::map<Perm, Multisegment> bm;           // label -> full-rank orbit
  std::map<Multisegment, Perm> orbit_label;  // inverse table
};

/* Requires the two lines apart: min lamL > max lamR + 1 (otherwise the
 * caller should twist by a character first), and lamL - lamR integral. */
ComparisonBlock block_data_from_infchar(std::vector<Rat> lamL, std::vector<Rat> lamR);

// Convenience: the block of phi with the default offsets eL=1/2, eR=-1/2.
ComparisonBlock block_from_weight(const WeightFunction& phi);

// bm(w) for any representative w (independent of the choice).
Multisegment gamma_orbit(const ComparisonBlock& b, const Perm& w);

// K-level functor on standards: the real standard labeled w maps to the
// p-adic standard of the orbit bm(w).
KElement gamma_std(const ComparisonBlock& b, const KElement& realStd);

// Orbit bijection and its inverse; inverse throws for labels outside the
// full-rank image.
Multisegment zeta_orbit(const ComparisonBlock& b, const Perm& repLabel);
Perm zeta_orbit_inv(const ComparisonBlock& b, const Multisegment& m);

/* Sheaf-side pullback: supported on full-rank orbits only, where it sends
 * (-1)^{dim O} times the standard (or simple) of the orbit bm(w) to
 * (-1)^{dim Z} times the standard (resp. simple) of the inverse coset. */
KElement zeta_pullback(const ComparisonBlock& b, const KElement& sheafPadic);

// Full-rank orbits as the image of the bijection, in canonical order.
std::vector<Multisegment> fullrank_orbits(const ComparisonBlock& b);

/* P-adic change of basis on the full-rank span, transported through the
 * bijection; rows and columns follow fullrank_orbits(b).  Rep side entries
 * are multiplicities of simples in standards; sheaf side entries expand
 * normalized classes as on the real side. */
Mat padic_std_to_simple(const ComparisonBlock& b, Side side, KLContext& ctx);

}  // namespace segkl
