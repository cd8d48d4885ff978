#pragma once

#include <map>

#include "segkl/multisegment.hpp"
#include "segkl/ratmat.hpp"

namespace segkl {

/* A graded operator is a family of linear maps T_p : V_p -> V_{p+1} between
 * the graded components of a space with dimension vector phi.  The variety
 * of all such families has dimension sum phi(p) phi(p+1), and the group
 * prod GL(V_p) acts with finitely many orbits classified by multisegments
 * of weight phi (the graded Jordan form). */
struct GradedOperator {
  WeightFunction dims;
  std::map<Rat, Mat> blocks;  // key p holds T_p : V_p -> V_{p+1}
};

long dim_ambient(const WeightFunction& phi);  // sum phi(p) phi(p+1)

/* Deterministic representative of the orbit of m: segments in canonical
 * order claim the next free coordinate in each degree they cover. */
GradedOperator jordan_rep(const Multisegment& m);

// Graded Jordan type of an arbitrary graded operator, via ranks of the
// composite maps V_i -> V_j.
Multisegment jordan_type(const GradedOperator& T);

/* Orbit dimension, computed exactly: the stabilizer of T in prod GL(V_p)
 * has the dimension of the kernel of g -> (g_{p+1} T_p - T_p g_p)_p, and
 * the orbit dimension is the rank of that linear map. */
long orbit_dimension(const Multisegment& m);

/* m is full rank when each integral piece of its weight carries exactly n
 * segments, n as in the unimodality datum of the piece.  Requires the
 * weight to satisfy the unimodality assumption. */
bool is_full_rank(const Multisegment& m);

}  // namespace segkl
