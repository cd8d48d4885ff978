#include "segkl/multisegment.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace segkl {

Segment::Segment(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
  Rat len(b - a);
  if (!is_integer(len) || len < 0)
    throw std::invalid_argument("segment endpoints must differ by a nonnegative integer");
}

bool Segment::contains_point(const Rat& p) const {
  return a <= p && p <= b && is_integer(Rat(p - a));
}

std::string Segment::str() const {
  if (a == b) return "[" + rat_str(a) + "]";
  return "[" + rat_str(a) + "," + rat_str(b) + "]";
}

bool seg_before(const Segment& s, const Segment& t) {
  Rat ss(s.a + s.b), st(t.a + t.b);
  if (ss != st) return ss > st;
  return s.b > t.b;
}

Multisegment Multisegment::of(std::vector<Segment> v) {
  std::sort(v.begin(), v.end(), seg_before);
  Multisegment m;
  m.segs = std::move(v);
  return m;
}

long Multisegment::mass() const {
  long tot = 0;
  for (const Segment& s : segs) tot += s.num_points();
  return tot;
}

bool Multisegment::operator<(const Multisegment& o) const {
  size_t k = std::min(segs.size(), o.segs.size());
  for (size_t i = 0; i < k; ++i) {
    if (seg_before(segs[i], o.segs[i])) return true;
    if (seg_before(o.segs[i], segs[i])) return false;
  }
  return segs.size() < o.segs.size();
}

std::string Multisegment::str() const {
  if (segs.empty()) return "0";
  std::ostringstream out;
  size_t i = 0;
  bool first = true;
  while (i < segs.size()) {
    size_t j = i;
    while (j < segs.size() && segs[j] == segs[i]) ++j;
    if (!first) out << "+";
    if (j - i > 1) out << (j - i);
    out << segs[i].str();
    first = false;
    i = j;
  }
  return out.str();
}

Multisegment disjoint_union(const Multisegment& m, const Multisegment& n) {
  std::vector<Segment> v = m.segs;
  v.insert(v.end(), n.segs.begin(), n.segs.end());
  return Multisegment::of(std::move(v));
}

long WeightFunction::operator()(const Rat& p) const {
  auto it = v.find(p);
  return it == v.end() ? 0 : it->second;
}

long WeightFunction::mass() const {
  long tot = 0;
  for (const auto& [p, c] : v) tot += c;
  return tot;
}

std::vector<Rat> WeightFunction::support() const {
  std::vector<Rat> s;
  for (const auto& [p, c] : v)
    if (c > 0) s.push_back(p);
  return s;
}

std::string WeightFunction::str() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [p, c] : v) {
    if (!first) out << ",";
    out << rat_str(p) << ":" << c;
    first = false;
  }
  out << "}";
  return out.str();
}

WeightFunction weight_of(const Multisegment& m) {
  WeightFunction phi;
  for (const Segment& s : m.segs)
    for (Rat p = s.a; p <= s.b; p += 1) phi.v[p] += 1;
  return phi;
}

bool is_linked(const Segment& s, const Segment& t) {
  if (!s.same_coset(t)) return false;
  if (s.contains(t) || t.contains(s)) return false;
  Rat lo(std::max(s.a, t.a)), hi(std::min(s.b, t.b));
  return lo <= hi + 1;  // union is a segment
}

std::vector<Multisegment> elementary_moves(const Multisegment& m) {
  std::set<Multisegment> out;
  const auto& v = m.segs;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (!is_linked(v[i], v[j])) continue;
      std::vector<Segment> w;
      w.reserve(v.size());
      for (size_t k = 0; k < v.size(); ++k)
        if (k != i && k != j) w.push_back(v[k]);
      Rat ua(std::min(v[i].a, v[j].a)), ub(std::max(v[i].b, v[j].b));
      Rat ia(std::max(v[i].a, v[j].a)), ib(std::min(v[i].b, v[j].b));
      w.emplace_back(ua, ub);
      if (ia <= ib) w.emplace_back(ia, ib);
      out.insert(Multisegment::of(std::move(w)));
    }
  return std::vector<Multisegment>(out.begin(), out.end());
}

std::map<Segment, long, SegLess> rank_profile(const Multisegment& m) {
  std::map<Segment, long, SegLess> r;
  for (const Segment& s : m.segs)
    for (Rat i = s.a; i <= s.b; i += 1)
      for (Rat j = i; j <= s.b; j += 1) r[Segment(i, j)] += 1;
  return r;
}

bool rank_dominated(const Multisegment& m, const Multisegment& n) {
  auto rm = rank_profile(m);
  auto rn = rank_profile(n);
  for (const auto& [seg, c] : rm) {
    auto it = rn.find(seg);
    if (it == rn.end() || it->second < c) return false;
  }
  return true;
}

bool closure_leq_bfs(const Multisegment& m, const Multisegment& n) {
  if (weight_of(m) != weight_of(n)) return false;
  if (m == n) return true;
  std::set<Multisegment> seen{m};
  std::deque<Multisegment> todo{m};
  while (!todo.empty()) {
    Multisegment cur = todo.front();
    todo.pop_front();
    for (const Multisegment& nx : elementary_moves(cur)) {
      if (nx == n) return true;
      if (seen.insert(nx).second) todo.push_back(nx);
    }
  }
  return false;
}

bool closure_leq(const Multisegment& m, const Multisegment& n) {
  if (weight_of(m) != weight_of(n)) return false;
  if (!rank_dominated(m, n)) return false;
  return closure_leq_bfs(m, n);
}

namespace {

/* Depth-first fill of one integral piece.  Candidates are all segments
 * inside the run, ordered by ascending start then ascending end; once the
 * search moves past a start point its remaining weight must be zero, since
 * no later candidate covers it. */
void enum_piece(const std::vector<Rat>& pts, std::map<Rat, long>& rem,
                const std::vector<std::pair<size_t, size_t>>& cands,
                size_t idx, std::vector<Segment>& acc,
                std::vector<Multisegment>& out) {
  if (idx == cands.size()) {
    for (const auto& [p, c] : rem)
      if (c != 0) return;
    out.push_back(Multisegment::of(acc));
    return;
  }
  auto [si, sj] = cands[idx];
  // Points strictly before the current start can no longer be covered.
  bool newstart = (idx == 0 || cands[idx - 1].first != si);
  if (newstart)
    for (size_t k = 0; k < si; ++k)
      if (rem[pts[k]] != 0) return;
  long cmax = rem[pts[si]];
  for (size_t k = si; k <= sj; ++k) cmax = std::min(cmax, rem[pts[k]]);
  for (long c = 0; c <= cmax; ++c) {
    if (c > 0)
      for (size_t k = si; k <= sj; ++k) rem[pts[k]] -= 1;
    size_t before = acc.size();
    for (long t = 0; t < c; ++t) acc.emplace_back(pts[si], pts[sj]);
    enum_piece(pts, rem, cands, idx + 1, acc, out);
    acc.resize(before);
  }
  // The loop decremented each covered point cmax times in total.
  for (size_t k = si; k <= sj; ++k) rem[pts[k]] += cmax;
}

std::vector<Multisegment> enumerate_piece(const WeightPiece& piece) {
  std::vector<Rat> pts;
  for (Rat p = piece.lo; p <= piece.hi; p += 1) pts.push_back(p);
  std::vector<std::pair<size_t, size_t>> cands;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i; j < pts.size(); ++j) cands.emplace_back(i, j);
  std::map<Rat, long> rem = piece.phi.v;
  std::vector<Segment> acc;
  std::vector<Multisegment> out;
  enum_piece(pts, rem, cands, 0, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Multisegment> enumerate_multisegments(const WeightFunction& phi) {
  if (phi.mass() == 0) return {Multisegment{}};
  std::vector<Multisegment> acc{Multisegment{}};
  for (const WeightPiece& piece : integral_pieces(phi)) {
    std::vector<Multisegment> part = enumerate_piece(piece);
    std::vector<Multisegment> next;
    next.reserve(acc.size() * part.size());
    for (const Multisegment& a : acc)
      for (const Multisegment& b : part) next.push_back(disjoint_union(a, b));
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

Multisegment dualize(const Multisegment& m) {
  std::vector<Segment> v;
  v.reserve(m.segs.size());
  for (const Segment& s : m.segs) v.emplace_back(Rat(-s.b), Rat(-s.a));
  return Multisegment::of(std::move(v));
}

WeightFunction dualize(const WeightFunction& phi) {
  WeightFunction out;
  for (const auto& [p, c] : phi.v) out.v[Rat(-p)] = c;
  return out;
}

std::vector<WeightPiece> integral_pieces(const WeightFunction& phi) {
  /* Runs live inside one coset of Z, so two interleaved lines (say integral
   * and half-integral support) must not cut each other's runs: a run starts
   * at p exactly when p - 1 carries no weight, and continues by unit
   * steps. */
  std::vector<WeightPiece> pieces;
  for (const auto& [p, c] : phi.v) {
    (void)c;
    if (phi(Rat(p - 1)) != 0) continue;
    WeightPiece piece;
    piece.lo = p;
    Rat q = p;
    while (phi(q) != 0) {
      piece.phi.v[q] = phi(q);
      piece.hi = q;
      q += 1;
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

std::optional<std::vector<RDatum>> assumption_r(const WeightFunction& phi) {
  std::vector<RDatum> data;
  for (const WeightPiece& piece : integral_pieces(phi)) {
    bool found = false;
    // r = lo + k + 1/2 with both r - 1/2 and r + 1/2 in the run.
    for (Rat rf = piece.lo; rf + 1 <= piece.hi && !found; rf += 1) {
      Rat rc(rf + 1);
      bool ok = true;
      for (Rat p = piece.lo; p < rc && ok; p += 1)
        if (piece.phi(p) > piece.phi(Rat(p + 1))) ok = false;
      for (Rat p = rf; p < piece.hi && ok; p += 1)
        if (piece.phi(p) < piece.phi(Rat(p + 1))) ok = false;
      if (ok) {
        RDatum d;
        d.piece = piece;
        d.r = rf + half();
        d.n = piece.phi(rf);
        data.push_back(std::move(d));
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return data;
}

}  // namespace segkl
