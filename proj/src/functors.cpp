#include "segkl/functors.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

namespace segkl {

namespace {

std::vector<Rat> apply_shift(const std::vector<Rat>& src, const std::vector<int>& idx,
                             int delta) {
  std::vector<Rat> dst = src;
  for (int i : idx) dst[static_cast<size_t>(i) - 1] += delta;
  return dst;
}

}  // namespace

TranslationDatum TranslationDatum::shift(const std::vector<Rat>& lam,
                                         std::vector<int> idx, int delta,
                                         Coord coord) {
  if (delta == 0) throw std::invalid_argument("translation: zero shift");
  if (!is_dominant(lam))
    throw std::invalid_argument("translation: source not weakly decreasing");
  for (size_t t = 0; t < idx.size(); ++t) {
    if (idx[t] < 1 || idx[t] > static_cast<int>(lam.size()))
      throw std::invalid_argument("translation: index out of range");
    if (t > 0 && idx[t] <= idx[t - 1])
      throw std::invalid_argument("translation: indices must increase");
  }
  int step = delta > 0 ? 1 : -1;
  std::vector<Rat> cur = lam;
  /* One datum may change facet at most once along its straight path: it
   * either leaves the source wall at the first step or lands on the target
   * wall at the last one.  (Interior wall contact is already impossible:
   * the step after touching a wall would leave the dominant cone.) */
  ParabSet prev = stabilizer_set(lam);
  int facet_changes = 0;
  for (int t = 1; t <= (delta > 0 ? delta : -delta); ++t) {
    cur = apply_shift(cur, idx, step);
    if (!is_dominant(cur))
      throw std::invalid_argument("translation: leaves the dominant cone");
    ParabSet here = stabilizer_set(cur);
    if (here != prev) ++facet_changes;
    prev = std::move(here);
  }
  if (facet_changes > 1)
    throw std::invalid_argument("translation: crosses a second wall");
  TranslationDatum d;
  d.coord = coord;
  d.src = lam;
  d.dst = std::move(cur);
  d.idx = std::move(idx);
  d.delta = delta;
  return d;
}

TranslationDatum TranslationDatum::run_decrement(const std::vector<Rat>& lam, int j,
                                                 int c, Coord coord) {
  int n = static_cast<int>(lam.size());
  if (j < 1 || c < 1 || j + c - 1 > n)
    throw std::invalid_argument("translation: run out of range");
  for (int i = j; i < j + c - 1; ++i)
    if (lam[static_cast<size_t>(i) - 1] != lam[static_cast<size_t>(i)])
      throw std::invalid_argument("translation: positions are not a constant run");
  if (j + c - 1 < n &&
      !(lam[static_cast<size_t>(j + c) - 2] > lam[static_cast<size_t>(j + c) - 1]))
    throw std::invalid_argument("translation: run must end where the value drops");
  std::vector<int> idx(static_cast<size_t>(c));
  for (int t = 0; t < c; ++t) idx[static_cast<size_t>(t)] = j + t;
  return shift(lam, std::move(idx), -1, coord);
}

TranslationDatum TranslationDatum::reversed() const {
  TranslationDatum d = *this;
  std::swap(d.src, d.dst);
  d.delta = -d.delta;
  return d;
}

RealBlock translated_block(const TranslationDatum& d, const RealBlock& src) {
  if (d.coord == TranslationDatum::Coord::L) {
    if (d.src != src.lamL) throw std::invalid_argument("translation: block mismatch");
    return RealBlock::of(d.dst, src.lamR);
  }
  if (d.src != src.lamR) throw std::invalid_argument("translation: block mismatch");
  return RealBlock::of(src.lamL, d.dst);
}

namespace {

// Minimal representatives of W_J / (W_J cap W_K), via right-descent pruning.
std::vector<Perm> quotient_reps(const ParabSet& J, const ParabSet& K, int n) {
  ParabSet I;
  std::set_intersection(J.begin(), J.end(), K.begin(), K.end(),
                        std::inserter(I, I.begin()));
  std::set<Perm> reps;
  for (const Perm& s : parabolic_elements(J, n)) {
    Perm m = s;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i : I)
        if (right_descent(m, i)) {
          m = m * Perm::simple(i, n);
          moved = true;
        }
    }
    reps.insert(m);
  }
  return std::vector<Perm>(reps.begin(), reps.end());
}

}  // namespace

KElement translate(const TranslationDatum& d, const RealBlock& src,
                   const KElement& realStd) {
  if (realStd.basis != Basis::RealStd)
    throw std::invalid_argument("translate: expects RealStd");
  RealBlock tgt = translated_block(d, src);
  bool left = (d.coord == TranslationDatum::Coord::L);
  ParabSet Jsrc = left ? src.JL : src.JR;
  ParabSet Jdst = left ? tgt.JL : tgt.JR;
  std::vector<Perm> reps = quotient_reps(Jsrc, Jdst, src.n);
  KElement out(Basis::RealStd);
  for (const auto& [l, c] : realStd.terms) {
    const Perm& w = std::get<Perm>(l);
    for (const Perm& s : reps) {
      Perm moved = left ? (s.inverse() * w) : (w * s);
      out.add(tgt.rep_label_of(moved), c);
    }
  }
  return out;
}

namespace {

int par(long k) { return k % 2 == 0 ? 1 : -1; }

// Adjoint route: matrix entry forced by <T X_w, M_v> = <X_w, I M_v>.
KElement pushpull_adjoint(const TranslationDatum& d, const RealBlock& src,
                          const RealBlock& tgt, const KElement& sheafStd,
                          KLContext& ctx) {
  KElement out(Basis::SheafRealStd);
  for (const Perm& w : src.rep_labels()) {
    KElement xw(Basis::RealStd);
    xw.add(w, 1);
    KElement txw = translate(d, src, xw);
    Perm x = src.rep_to_sheaf(w);
    long long coeff = 0;
    for (const auto& [lv, cv] : sheafStd.terms) {
      const Perm& v = std::get<Perm>(lv);
      auto it = txw.terms.find(KLabel(tgt.sheaf_to_rep(v)));
      if (it != txw.terms.end()) coeff += cv * it->second * par(tgt.dimZ(v));
    }
    out.add(x, coeff * par(src.dimZ(x)));
  }
  (void)ctx;
  return out;
}

/* Geometric route: pull back along the correspondence, orbit by orbit with
 * parity shifts, then push forward.  For an L-coordinate datum the
 * correspondence space has coset labels W(lamR) \ W / W(JL cap JL'). */
KElement pushpull_direct(const TranslationDatum& d, const RealBlock& src,
                         const RealBlock& tgt, const KElement& sheafStd) {
  bool left = (d.coord == TranslationDatum::Coord::L);
  // sheaf-side coset data: (A, B) with A the lamR-side, B the lamL-side
  ParabSet Asrc = left ? src.JR : src.JR;  // changes only on the moved side
  ParabSet Bsrc = src.JL;
  ParabSet Atgt = tgt.JR, Btgt = tgt.JL;
  ParabSet Aq, Bq;
  if (left) {
    Aq = Atgt;  // = Asrc
    std::set_intersection(Bsrc.begin(), Bsrc.end(), Btgt.begin(), Btgt.end(),
                          std::inserter(Bq, Bq.begin()));
  } else {
    Bq = Btgt;  // = Bsrc
    std::set_intersection(Asrc.begin(), Asrc.end(), Atgt.begin(), Atgt.end(),
                          std::inserter(Aq, Aq.begin()));
  }
  std::vector<Perm> qlabels = double_cosets(Aq, Bq, src.n);
  KElement out(Basis::SheafRealStd);
  for (const auto& [lv, cv] : sheafStd.terms) {
    const Perm& v = std::get<Perm>(lv);
    long dv = dim_orbit_pair(Atgt, Btgt, v);
    for (const Perm& dq : qlabels) {
      if (min_coset_rep(dq, Atgt, Btgt) != v) continue;  // not over this orbit
      Perm c2 = min_coset_rep(dq, Asrc, Bsrc);
      long dc = dim_orbit_pair(Asrc, Bsrc, c2);
      out.add(c2, cv * par(dv + dc));
    }
  }
  return out;
}

}  // namespace

KElement pushpull(const TranslationDatum& d, const RealBlock& src,
                  const KElement& sheafStd, KLContext& ctx) {
  if (sheafStd.basis != Basis::SheafRealStd)
    throw std::invalid_argument("pushpull: expects SheafRealStd");
  RealBlock tgt = translated_block(d, src);
  KElement a = pushpull_adjoint(d, src, tgt, sheafStd, ctx);
  KElement g = pushpull_direct(d, src, tgt, sheafStd);
  if (!(a == g))
    throw std::logic_error("pushpull: adjoint and geometric routes disagree");
  return a;
}

namespace {

std::vector<Rat> staircase(int n, const Rat& top) {
  std::vector<Rat> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = Rat(top - i);
  return v;
}

// Split dst - src into unit indicator steps that stay dominant: lower all
// coordinates still above target (resp. raise all below) by one per step.
std::vector<TranslationDatum> unit_steps(const std::vector<Rat>& src,
                                         const std::vector<Rat>& dst,
                                         TranslationDatum::Coord coord) {
  std::vector<TranslationDatum> steps;
  std::vector<Rat> cur = src;
  for (;;) {
    std::vector<int> up, down;
    for (size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] < dst[i]) up.push_back(static_cast<int>(i) + 1);
      if (cur[i] > dst[i]) down.push_back(static_cast<int>(i) + 1);
    }
    if (up.empty() && down.empty()) break;
    if (!up.empty() && !down.empty())
      throw std::invalid_argument("translation path: mixed directions");
    std::vector<int> idx = up.empty() ? down : up;
    int delta = up.empty() ? -1 : 1;
    TranslationDatum st = TranslationDatum::shift(cur, idx, delta, coord);
    cur = st.dst;
    steps.push_back(std::move(st));
  }
  return steps;
}

KElement translate_path(const std::vector<TranslationDatum>& steps, RealBlock block,
                        KElement elt) {
  for (const TranslationDatum& st : steps) {
    elt = translate(st, block, elt);
    block = translated_block(st, block);
  }
  return elt;
}

}  // namespace

bool factor_check(const std::vector<Rat>& lam, const std::vector<Rat>& lamPrime,
                  const std::vector<Rat>& lamSecond) {
  if (!is_dominant(lam) || !is_dominant(lamPrime) || !is_dominant(lamSecond))
    throw std::invalid_argument("factor_check: all three must be weakly decreasing");
  ParabSet W0 = stabilizer_set(lam), W1 = stabilizer_set(lamPrime);
  ParabSet meet;
  std::set_intersection(W0.begin(), W0.end(), W1.begin(), W1.end(),
                        std::inserter(meet, meet.begin()));
  // The middle character matters only through its facet.
  if (stabilizer_set(lamSecond) != meet) return false;
  int n = static_cast<int>(lam.size());
  RealBlock block = RealBlock::of(lam, staircase(n, Rat(-1)));
  std::vector<TranslationDatum> direct = unit_steps(lam, lamPrime, TranslationDatum::Coord::L);
  std::vector<TranslationDatum> lift = unit_steps(lam, lamSecond, TranslationDatum::Coord::L);
  std::vector<TranslationDatum> drop = unit_steps(lamSecond, lamPrime, TranslationDatum::Coord::L);
  std::vector<TranslationDatum> through = lift;
  through.insert(through.end(), drop.begin(), drop.end());
  for (const Perm& w : block.rep_labels()) {
    KElement xw(Basis::RealStd);
    xw.add(w, 1);
    if (!(translate_path(direct, block, xw) == translate_path(through, block, xw)))
      return false;
  }
  return true;
}

bool composed_translation_identity(int n, const ParabSet& J) {
  std::vector<Rat> nu = staircase(n, Rat(n));
  // Singular value on the wall with stabilizer exactly J: each coordinate
  // drops to the bottom of its block.
  Composition comp = set_to_composition(J, n);
  std::vector<Rat> lam;
  size_t pos = 0;
  for (int blk : comp) {
    for (int t = 0; t < blk; ++t)
      lam.push_back(nu[pos + static_cast<size_t>(blk) - 1]);
    pos += static_cast<size_t>(blk);
  }
  if (stabilizer_set(lam) != J)
    throw std::logic_error("composed_translation_identity: bad wall value");
  RealBlock block = RealBlock::of(nu, staircase(n, Rat(-1)));
  std::vector<TranslationDatum> down = unit_steps(nu, lam, TranslationDatum::Coord::L);
  std::vector<TranslationDatum> back = unit_steps(lam, nu, TranslationDatum::Coord::L);
  std::vector<TranslationDatum> round = down;
  round.insert(round.end(), back.begin(), back.end());
  std::vector<Perm> WJ = parabolic_elements(J, n);
  for (const Perm& w : block.rep_labels()) {
    KElement xw(Basis::RealStd);
    xw.add(w, 1);
    KElement lhs = translate_path(round, block, xw);
    KElement rhs(Basis::RealStd);
    for (const Perm& u : WJ) {
      KElement term = weyl_act({u, Perm::identity(n)}, xw, block);
      rhs = rhs + term;
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

namespace {

// Last run of entries equal to val in a weakly decreasing vector; returns
// the 1-based start of the run's suffix of length c.
int run_suffix_start(const std::vector<Rat>& lam, const Rat& val, int c) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(lam.size()); ++i) {
    if (lam[static_cast<size_t>(i)] == val) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0 || last - first + 1 < c)
    throw std::domain_error("derivative datum: run too short");
  return last - c + 2;  // 1-based start of the suffix
}

DiagramRow check_label(const ComparisonBlock& src, const ComparisonBlock& tgt,
                       const TranslationDatum& datum, const Rat& k, const Perm& w) {
  DiagramRow row;
  row.label = w;
  KElement xw(Basis::RealStd);
  xw.add(w, 1);
  KElement padic = gamma_std(src, xw);
  row.lhs = project_weight(bz_derivative(DSide::Left, k, padic), tgt.phi);
  row.rhs = gamma_std(tgt, translate(datum, src.real, xw));
  row.ok = (row.lhs == row.rhs);
  return row;
}

}  // namespace

namespace {

/* Block of phi at the given coordinate offsets.  Offsets with eL - eR = 1
 * act as a determinant twist: the parameters read back the weight of phi
 * translated by t = eR + 1/2.  Other differences change segment lengths and
 * are malformed. */
ComparisonBlock block_at(const WeightFunction& phi, const Rat& eL, const Rat& eR) {
  if (Rat(eL - eR) != 1)
    throw std::domain_error(
        "diagram: offsets must differ by 1 (a determinant twist) to preserve "
        "segment lengths");
  auto [lamL, lamR] = infchar_from_weight(phi, eL, eR);
  ComparisonBlock b = block_data_from_infchar(std::move(lamL), std::move(lamR));
  WeightFunction twisted;
  Rat t(eR + half());
  for (const auto& [p, cnt] : phi.v) twisted.v[Rat(p + t)] = cnt;
  if (b.phi != twisted)
    throw std::logic_error("diagram: block weight failed to match the twisted weight");
  return b;
}

}  // namespace

DiagramReport verify_main_diagram(const WeightFunction& phi, long c, const Rat& k,
                                  const Rat& eL, const Rat& eR, int threads) {
  if (c < 1) throw std::domain_error("diagram: multiplicity must be positive");
  auto data = assumption_r(phi);
  if (!data) throw std::domain_error("diagram: weight fails the unimodality assumption");
  const RDatum* piece = nullptr;
  for (const RDatum& d : *data)
    if (d.piece.lo <= k && k <= d.piece.hi && is_integer(Rat(k - d.piece.lo)))
      piece = &d;
  if (!piece) throw std::domain_error("diagram: degree outside the support");
  Rat rf(piece->r - half()), rc(piece->r + half());
  if (k == rf || k == rc)
    throw std::domain_error("diagram: degree must avoid the central pair");
  if (k < rf) {
    // Reduce the left case to the mirrored weight.
    DiagramReport rep =
        verify_main_diagram(dualize(phi), c, Rat(-k), Rat(-eR), Rat(-eL), threads);
    rep.note = "checked through endpoint reflection; " + rep.note;
    return rep;
  }
  if (phi(k) - phi(Rat(k + 1)) < c)
    throw std::domain_error("diagram: weight drop at the degree is smaller than c");
  DiagramReport rep;
  rep.phi = piece->piece.phi;
  WeightFunction psi = piece->piece.phi;
  psi.v[k] -= c;
  if (psi.v[k] == 0) psi.v.erase(k);
  rep.psi = psi;
  if (data->size() > 1)
    rep.note = "verified on the coordinate line of the degree; other lines are untouched; ";
  ComparisonBlock src = block_at(piece->piece.phi, eL, eR);
  ComparisonBlock tgt = block_at(psi, eL, eR);
  // The run of lamL at value k + eL loses its last c entries; on the p-adic
  // side the twist moves the degree to k + eR + 1/2.
  Rat kBlock(k + eR + half());
  int j = run_suffix_start(src.lamL, Rat(k + eL), static_cast<int>(c));
  TranslationDatum datum =
      TranslationDatum::run_decrement(src.lamL, j, static_cast<int>(c));
  if (translated_block(datum, src.real).lamL != tgt.lamL)
    throw std::logic_error("diagram: translation target mismatch");
  rep.ok = true;
  if (threads > 1) {
    std::vector<std::future<DiagramRow>> futs;
    for (const Perm& w : src.labels)
      futs.push_back(std::async(std::launch::async, check_label, std::cref(src),
                                std::cref(tgt), std::cref(datum), std::cref(kBlock), w));
    for (auto& f : futs) {
      rep.rows.push_back(f.get());
      rep.ok = rep.ok && rep.rows.back().ok;
    }
  } else {
    for (const Perm& w : src.labels) {
      rep.rows.push_back(check_label(src, tgt, datum, kBlock, w));
      rep.ok = rep.ok && rep.rows.back().ok;
    }
  }
  return rep;
}

std::vector<std::pair<long, Rat>> admissible_diagram_cases(const WeightFunction& phi) {
  std::vector<std::pair<long, Rat>> out;
  auto data = assumption_r(phi);
  if (!data) return out;
  for (const RDatum& d : *data) {
    Rat rf(d.r - half()), rc(d.r + half());
    for (const auto& [k, cnt] : d.piece.phi.v) {
      if (k == rf || k == rc) continue;
      long drop = k > rc ? phi(k) - phi(Rat(k + 1)) : phi(k) - phi(Rat(k - 1));
      for (long c = 1; c <= drop; ++c) out.emplace_back(c, k);
    }
  }
  return out;
}

}  // namespace segkl
