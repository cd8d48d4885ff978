#include "segkl/comparison.hpp"

#include <algorithm>
#include <stdexcept>

namespace segkl {

Composition tau_composition(Composition c) {
  std::reverse(c.begin(), c.end());
  return c;
}

std::vector<Rat> tau_coordinates(std::vector<Rat> v) {
  std::reverse(v.begin(), v.end());
  for (Rat& x : v) x = -x;
  return v;
}

namespace {

RDatum single_piece_datum(const WeightFunction& phi) {
  auto data = assumption_r(phi);
  if (!data)
    throw std::domain_error("weight fails the unimodality assumption");
  if (data->size() != 1)
    throw std::domain_error("weight must live on a single coordinate line");
  return (*data)[0];
}

}  // namespace

std::pair<Composition, Composition> parabolics_from_weight(const WeightFunction& phi) {
  RDatum d = single_piece_datum(phi);
  Rat rf(d.r - half()), rc(d.r + half());
  Composition left, right;
  for (Rat p = d.piece.lo; p <= rf; p += 1) {
    long inc = d.piece.phi(p) - d.piece.phi(Rat(p - 1));
    if (inc > 0) left.push_back(static_cast<int>(inc));
  }
  for (Rat p = d.piece.hi; p >= rc; p -= 1) {
    long dec = d.piece.phi(p) - d.piece.phi(Rat(p + 1));
    if (dec > 0) right.push_back(static_cast<int>(dec));
  }
  return {left, right};
}

std::pair<std::vector<Rat>, std::vector<Rat>> infchar_from_weight(
    const WeightFunction& phi, const Rat& eL, const Rat& eR) {
  RDatum d = single_piece_datum(phi);
  Rat rf(d.r - half()), rc(d.r + half());
  std::vector<Rat> bs, as;  // right ends descending, left ends ascending
  for (Rat p = d.piece.hi; p >= rc; p -= 1) {
    long dec = d.piece.phi(p) - d.piece.phi(Rat(p + 1));
    for (long t = 0; t < dec; ++t) bs.push_back(p);
  }
  for (Rat p = d.piece.lo; p <= rf; p += 1) {
    long inc = d.piece.phi(p) - d.piece.phi(Rat(p - 1));
    for (long t = 0; t < inc; ++t) as.push_back(p);
  }
  std::vector<Rat> lamL, lamR;
  for (const Rat& b : bs) lamL.push_back(Rat(b + eL));
  for (auto it = as.rbegin(); it != as.rend(); ++it) lamR.push_back(Rat(*it + eR));
  return {lamL, lamR};
}

namespace {

Multisegment bm_of(const std::vector<Rat>& lamL, const std::vector<Rat>& lamR,
                   const Perm& w) {
  std::vector<Rat> wr = act(w, lamR);
  std::vector<Segment> segs;
  for (size_t i = 0; i < lamL.size(); ++i)
    segs.emplace_back(Rat(wr[i] + half()), Rat(lamL[i] - half()));
  return Multisegment::of(std::move(segs));
}

}  // namespace

ComparisonBlock block_data_from_infchar(std::vector<Rat> lamL, std::vector<Rat> lamR) {
  if (lamL.size() != lamR.size())
    throw std::invalid_argument("block: coordinate lines mismatched");
  if (lamL.empty()) {
    // Degenerate block on no coordinates: one parameter, one orbit, both
    // empty, so every map out of it is forced.
    ComparisonBlock b;
    b.real = RealBlock::of({}, {});
    b.n = 0;
    b.r = Rat(0);
    b.labels = b.real.rep_labels();
    for (const Perm& w : b.labels) {
      Multisegment m;
      b.bm.emplace(w, m);
      b.orbit_label.emplace(m, w);
    }
    return b;
  }
  for (size_t i = 0; i < lamL.size(); ++i)
    if (!is_integer(Rat(lamL[i] - lamR[0])) || !is_integer(Rat(lamR[i] - lamR[0])))
      throw std::domain_error("block: coordinates must lie on one integral line");
  Rat minL = lamL[0], maxR = lamR[0];
  for (const Rat& x : lamL) minL = std::min(minL, x);
  for (const Rat& x : lamR) maxR = std::max(maxR, x);
  if (!(minL > maxR + 1))
    throw std::domain_error(
        "block: coordinate lines too close; apply a determinant twist first");
  ComparisonBlock b;
  b.real = RealBlock::of(lamL, lamR);
  b.lamL = std::move(lamL);
  b.lamR = std::move(lamR);
  b.n = static_cast<long>(b.lamL.size());
  b.phi = weight_of(bm_of(b.lamL, b.lamR, Perm::identity(static_cast<int>(b.n))));
  RDatum d = single_piece_datum(b.phi);
  b.r = d.r;
  b.labels = b.real.rep_labels();
  for (const Perm& w : b.labels) {
    Multisegment m = bm_of(b.lamL, b.lamR, w);
    if (b.orbit_label.count(m))
      throw std::logic_error("block: orbit matching failed to be injective");
    b.bm.emplace(w, m);
    b.orbit_label.emplace(m, w);
  }
  return b;
}

ComparisonBlock block_from_weight(const WeightFunction& phi) {
  auto [lamL, lamR] = infchar_from_weight(phi, half(), Rat(-half()));
  ComparisonBlock b = block_data_from_infchar(std::move(lamL), std::move(lamR));
  if (b.phi != phi)
    throw std::logic_error("block: weight round trip failed");
  return b;
}

Multisegment gamma_orbit(const ComparisonBlock& b, const Perm& w) {
  return b.bm.at(b.real.rep_label_of(w));
}

KElement gamma_std(const ComparisonBlock& b, const KElement& realStd) {
  if (realStd.basis != Basis::RealStd)
    throw std::invalid_argument("gamma_std: expects RealStd");
  KElement out(Basis::PadicStd);
  for (const auto& [l, c] : realStd.terms)
    out.add(gamma_orbit(b, std::get<Perm>(l)), c);
  return out;
}

Multisegment zeta_orbit(const ComparisonBlock& b, const Perm& repLabel) {
  return gamma_orbit(b, repLabel);
}

Perm zeta_orbit_inv(const ComparisonBlock& b, const Multisegment& m) {
  auto it = b.orbit_label.find(m);
  if (it == b.orbit_label.end())
    throw std::invalid_argument("zeta_orbit_inv: not a full-rank orbit of this block");
  return it->second;
}

KElement zeta_pullback(const ComparisonBlock& b, const KElement& sheafPadic) {
  bool simple = (sheafPadic.basis == Basis::SheafPadicSimple);
  if (sheafPadic.basis != Basis::SheafPadicStd && !simple)
    throw std::invalid_argument("zeta_pullback: expects a p-adic sheaf element");
  KElement out(simple ? Basis::SheafRealSimple : Basis::SheafRealStd);
  for (const auto& [l, c] : sheafPadic.terms) {
    const Multisegment& m = std::get<Multisegment>(l);
    auto it = b.orbit_label.find(m);
    if (it == b.orbit_label.end()) {
      if (weight_of(m) != b.phi)
        throw std::invalid_argument(
            "zeta_pullback: orbit lies outside this block's weight class");
      continue;  // supported off the full-rank locus: pulls back to zero
    }
    Perm w = it->second;
    Perm v = b.real.rep_to_sheaf(w);
    long sign_exp = orbit_dimension(m) + b.real.dimZ(v);
    out.add(v, (sign_exp % 2 == 0 ? 1 : -1) * c);
  }
  return out;
}

std::vector<Multisegment> fullrank_orbits(const ComparisonBlock& b) {
  std::vector<Multisegment> out;
  out.reserve(b.orbit_label.size());
  for (const auto& [m, w] : b.orbit_label) out.push_back(m);
  return out;  // map order is the canonical multisegment order
}

Mat padic_std_to_simple(const ComparisonBlock& b, Side side, KLContext& ctx) {
  Mat real = std_to_simple(b.real, side, ctx);
  std::vector<Multisegment> orbits = fullrank_orbits(b);
  std::vector<Perm> rlabels = (side == Side::Rep) ? b.real.rep_labels()
                                                  : b.real.sheaf_labels();
  size_t N = orbits.size();
  Mat out(N, N);
  auto real_index = [&](const Multisegment& m) {
    Perm w = b.orbit_label.at(m);
    Perm lab = (side == Side::Rep) ? w : b.real.rep_to_sheaf(w);
    auto it = std::find(rlabels.begin(), rlabels.end(), lab);
    return static_cast<size_t>(it - rlabels.begin());
  };
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j)
      out.at(i, j) = real.at(real_index(orbits[i]), real_index(orbits[j]));
  return out;
}

}  // namespace segkl
