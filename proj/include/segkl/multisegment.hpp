#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segkl/rational.hpp"

namespace segkl {

/* A segment [a,b] is the set {a, a+1, ..., b} of rational points with
 * b - a a nonnegative integer.  Segments are ordered by descending a+b,
 * then descending b; multisegments keep their segments sorted that way,
 * so equal multisets compare equal as vectors. */
struct Segment {
  Rat a, b;

  Segment() = default;
  Segment(Rat a_, Rat b_);

  long num_points() const { return to_long(Rat(b - a)) + 1; }
  bool contains_point(const Rat& p) const;
  bool contains(const Segment& o) const { return a <= o.a && o.b <= b; }
  bool same_coset(const Segment& o) const { return is_integer(Rat(o.a - a)); }

  bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Segment& o) const { return !(*this == o); }
  std::string str() const;
};

// Canonical segment order: descending a+b, ties by descending b.
bool seg_before(const Segment& s, const Segment& t);

struct SegLess {
  bool operator()(const Segment& s, const Segment& t) const {
    return seg_before(s, t);
  }
};

struct Multisegment {
  std::vector<Segment> segs;  // always sorted by seg_before

  Multisegment() = default;
  static Multisegment of(std::vector<Segment> v);

  size_t size() const { return segs.size(); }
  long mass() const;
  bool operator==(const Multisegment& o) const { return segs == o.segs; }
  bool operator!=(const Multisegment& o) const { return !(*this == o); }
  bool operator<(const Multisegment& o) const;  // total order for containers
  std::string str() const;
};

// Multiset union of the segment lists.
Multisegment disjoint_union(const Multisegment& m, const Multisegment& n);

/* A weight is a finitely supported function from rational points to
 * nonnegative integers; it records how many segments cover each point. */
struct WeightFunction {
  std::map<Rat, long> v;  // only nonzero entries

  long operator()(const Rat& p) const;
  long mass() const;
  std::vector<Rat> support() const;  // ascending
  bool operator==(const WeightFunction& o) const { return v == o.v; }
  bool operator!=(const WeightFunction& o) const { return !(*this == o); }
  bool operator<(const WeightFunction& o) const { return v < o.v; }
  std::string str() const;
};

WeightFunction weight_of(const Multisegment& m);

// Segments are linked when neither contains the other and their union is
// again a segment.
bool is_linked(const Segment& s, const Segment& t);

/* One elementary operation replaces a linked pair by union and
 * intersection, dropping an empty intersection.  The results are exactly
 * the multisegments reachable in one step; duplicates are removed. */
std::vector<Multisegment> elementary_moves(const Multisegment& m);

/* r(i,j) = number of segments containing [i,j], for every subsegment with
 * r > 0.  Pointwise comparison of rank profiles is the dominance order. */
std::map<Segment, long, SegLess> rank_profile(const Multisegment& m);

// True when rank_profile(m) <= rank_profile(n) pointwise.
bool rank_dominated(const Multisegment& m, const Multisegment& n);

/* closure_leq(m,n): the orbit of m lies in the closure of the orbit of n,
 * i.e. some chain of elementary operations transforms m into n.  The BFS
 * variant is the decision procedure; closure_leq adds the rank-profile
 * dominance test as a fast pre-filter. */
bool closure_leq_bfs(const Multisegment& m, const Multisegment& n);
bool closure_leq(const Multisegment& m, const Multisegment& n);

// All multisegments of the given weight, in canonical order.
std::vector<Multisegment> enumerate_multisegments(const WeightFunction& phi);

Multisegment dualize(const Multisegment& m);   // [a,b] -> [-b,-a]
WeightFunction dualize(const WeightFunction& phi);

/* An integral piece of a weight is a maximal run p, p+1, ..., q of support
 * points.  Segments of a multisegment never cross piece boundaries. */
struct WeightPiece {
  WeightFunction phi;  // restriction to the run
  Rat lo, hi;          // first and last point of the run
};

std::vector<WeightPiece> integral_pieces(const WeightFunction& phi);

/* A piece satisfies the unimodality assumption when some half-integer r
 * (relative to the coset of the support) has phi weakly increasing up to
 * r + 1/2 and weakly decreasing from r - 1/2 on.  Then
 * phi(r - 1/2) = phi(r + 1/2) = max phi =: n.  The smallest such r is
 * reported.  Fails (nullopt) when any piece has no such r. */
struct RDatum {
  WeightPiece piece;
  Rat r;       // half-integer relative to the coset
  long n;      // phi(r - 1/2) = phi(r + 1/2)
};

std::optional<std::vector<RDatum>> assumption_r(const WeightFunction& phi);

}  // namespace segkl
