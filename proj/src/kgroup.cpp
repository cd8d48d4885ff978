#include "segkl/kgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace segkl {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::RealStd: return "RealStd";
    case Basis::RealSimple: return "RealSimple";
    case Basis::PadicStd: return "PadicStd";
    case Basis::PadicSimple: return "PadicSimple";
    case Basis::SheafRealStd: return "SheafRealStd";
    case Basis::SheafRealSimple: return "SheafRealSimple";
    case Basis::SheafPadicStd: return "SheafPadicStd";
    case Basis::SheafPadicSimple: return "SheafPadicSimple";
  }
  throw std::logic_error("basis_name: bad tag");
}

Basis basis_from_name(const std::string& s) {
  for (Basis b : {Basis::RealStd, Basis::RealSimple, Basis::PadicStd,
                  Basis::PadicSimple, Basis::SheafRealStd, Basis::SheafRealSimple,
                  Basis::SheafPadicStd, Basis::SheafPadicSimple})
    if (basis_name(b) == s) return b;
  throw std::invalid_argument("unknown basis tag: " + s);
}

void KElement::add(const KLabel& l, long long c) {
  if (c == 0) return;
  auto it = terms.find(l);
  if (it == terms.end()) {
    terms.emplace(l, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string KElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [l, c] : terms) {
    if (!first) out << (c >= 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    long long a = c >= 0 ? c : -c;
    if (a != 1) out << a << "*";
    if (std::holds_alternative<Multisegment>(l))
      out << std::get<Multisegment>(l).str();
    else
      out << "w=" << std::get<Perm>(l).str();
    first = false;
  }
  return out.str();
}

KElement operator+(const KElement& a, const KElement& b) {
  if (a.basis != b.basis) throw std::invalid_argument("KElement +: basis mismatch");
  KElement r = a;
  for (const auto& [l, c] : b.terms) r.add(l, c);
  return r;
}

KElement scale(long long c, const KElement& a) {
  KElement r(a.basis);
  for (const auto& [l, x] : a.terms) r.add(l, c * x);
  return r;
}

RealBlock RealBlock::of(std::vector<Rat> lamL, std::vector<Rat> lamR) {
  if (lamL.size() != lamR.size())
    throw std::invalid_argument("block: coordinate lines differ in size");
  RealBlock b;
  b.n = static_cast<int>(lamL.size());
  b.JL = stabilizer_set(lamL);  // throws unless weakly decreasing
  b.JR = stabilizer_set(lamR);
  b.lamL = std::move(lamL);
  b.lamR = std::move(lamR);
  return b;
}

std::vector<Perm> RealBlock::rep_labels() const { return double_cosets(JL, JR, n); }
std::vector<Perm> RealBlock::sheaf_labels() const { return double_cosets(JR, JL, n); }
Perm RealBlock::rep_label_of(const Perm& w) const { return min_coset_rep(w, JL, JR); }
Perm RealBlock::sheaf_label_of(const Perm& w) const { return min_coset_rep(w, JR, JL); }
Perm RealBlock::rep_to_sheaf(const Perm& w) const { return sheaf_label_of(w.inverse()); }
Perm RealBlock::sheaf_to_rep(const Perm& v) const { return rep_label_of(v.inverse()); }
long RealBlock::dimZ(const Perm& v) const { return dim_orbit_pair(JR, JL, v); }

namespace {

size_t index_of(const std::vector<Perm>& labels, const Perm& w) {
  auto it = std::find(labels.begin(), labels.end(), w);
  if (it == labels.end()) throw std::invalid_argument("label not in block");
  return static_cast<size_t>(it - labels.begin());
}

int par(long k) { return k % 2 == 0 ? 1 : -1; }

// Signed expansion of sheaf simples in sheaf standards (unnormalized
// classes): column v of the result expands L_v.
Mat sheaf_simple_in_std_signed(const RealBlock& b, KLContext& ctx) {
  std::vector<Perm> labels = b.sheaf_labels();
  size_t N = labels.size();
  std::vector<Perm> wplus(N);
  for (size_t i = 0; i < N; ++i) wplus[i] = max_coset_rep(labels[i], b.JR, b.JL);
  Mat S(N, N);
  for (size_t x = 0; x < N; ++x)
    for (size_t v = 0; v < N; ++v) {
      if (!bruhat_leq(labels[x], labels[v])) continue;
      long long p = ctx.kl_at_one(wplus[x], wplus[v]);
      S.at(x, v) = static_cast<long>(p * par(b.dimZ(labels[x]) + b.dimZ(labels[v])));
    }
  return S;
}

}  // namespace

Mat std_to_simple(const RealBlock& block, Side side, KLContext& ctx) {
  std::vector<Perm> slabels = block.sheaf_labels();
  size_t N = slabels.size();
  if (side == Side::Sheaf) {
    std::vector<Perm> wplus(N);
    for (size_t i = 0; i < N; ++i)
      wplus[i] = max_coset_rep(slabels[i], block.JR, block.JL);
    /* Multiplicity of the simple labeled x in the standard labeled v, in
     * normalized classes: the KL value at the longest coset representatives.
     * Only this convention makes the rep-side matrix below its transported
     * transpose; the pairing's dim-Z signs cancel against the normalization. */
    Mat B(N, N);
    for (size_t v = 0; v < N; ++v)
      for (size_t x = 0; x < N; ++x) {
        if (!bruhat_leq(slabels[x], slabels[v])) continue;
        B.at(x, v) = static_cast<long>(ctx.kl_at_one(wplus[x], wplus[v]));
      }
    return B;
  }
  /* Representation side, forced by duality: the matrix A expanding the
   * simple labeled u in standards is the unique solution of
   *   <sum_w A[w][u] X_w, L_v> = (-1)^{dim Z_v} [v = label of u^{-1}],
   * and the expansion of standards into simples is its inverse. */
  std::vector<Perm> rlabels = block.rep_labels();
  Mat Ssig = sheaf_simple_in_std_signed(block, ctx);
  Mat H(N, N);  // H[w][v] = <X_w, L_v>
  for (size_t w = 0; w < N; ++w) {
    Perm ws = block.rep_to_sheaf(rlabels[w]);
    size_t x = index_of(slabels, ws);
    for (size_t v = 0; v < N; ++v)
      H.at(w, v) = Ssig.at(x, v) * par(block.dimZ(ws));
  }
  Mat D(N, N);  // D[u][v] = (-1)^{dim Z_v} [v = label of u^{-1}]
  for (size_t u = 0; u < N; ++u) {
    Perm us = block.rep_to_sheaf(rlabels[u]);
    size_t v = index_of(slabels, us);
    D.at(u, v) = par(block.dimZ(us));
  }
  Mat A = transpose(mul(D, inverse(H)));
  Mat R = inverse(A);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      if (!is_integer(R.at(i, j)) || R.at(i, j) < 0)
        throw std::logic_error("std_to_simple: non-integral or negative multiplicity");
    }
  return R;
}

Mat simple_to_std(const RealBlock& block, Side side, KLContext& ctx) {
  Mat inv = inverse(std_to_simple(block, side, ctx));
  for (size_t i = 0; i < inv.rows; ++i)
    for (size_t j = 0; j < inv.cols; ++j)
      if (!is_integer(inv.at(i, j)))
        throw std::logic_error("simple_to_std: non-integral entry");
  return inv;
}

namespace {

// Rewrite an element in the matching standard basis of its block.
KElement to_standard(const KElement& e, const RealBlock& block, KLContext& ctx) {
  if (e.basis == Basis::RealStd || e.basis == Basis::SheafRealStd) return e;
  bool rep = (e.basis == Basis::RealSimple);
  if (!rep && e.basis != Basis::SheafRealSimple)
    throw std::invalid_argument("pairing: expected a real-block element");
  std::vector<Perm> labels = rep ? block.rep_labels() : block.sheaf_labels();
  KElement out(rep ? Basis::RealStd : Basis::SheafRealStd);
  if (rep) {
    Mat A = simple_to_std(block, Side::Rep, ctx);
    for (const auto& [l, c] : e.terms) {
      size_t u = index_of(labels, std::get<Perm>(l));
      for (size_t w = 0; w < labels.size(); ++w)
        out.add(labels[w], c * to_long(Rat(A.at(w, u))));
    }
  } else {
    Mat S = sheaf_simple_in_std_signed(block, ctx);
    for (const auto& [l, c] : e.terms) {
      size_t v = index_of(labels, std::get<Perm>(l));
      for (size_t x = 0; x < labels.size(); ++x)
        out.add(labels[x], c * to_long(Rat(S.at(x, v))));
    }
  }
  return out;
}

}  // namespace

long long pairing(const KElement& repElt, const KElement& sheafElt,
                  const RealBlock& block, KLContext& ctx) {
  KElement r = to_standard(repElt, block, ctx);
  KElement s = to_standard(sheafElt, block, ctx);
  if (r.basis != Basis::RealStd || s.basis != Basis::SheafRealStd)
    throw std::invalid_argument("pairing: sides do not match the block");
  long long acc = 0;
  for (const auto& [lw, cw] : r.terms) {
    Perm v = block.rep_to_sheaf(std::get<Perm>(lw));
    auto it = s.terms.find(KLabel(v));
    if (it != s.terms.end()) acc += cw * it->second * par(block.dimZ(v));
  }
  return acc;
}

long long pairing_padic(const KElement& repElt, const KElement& sheafElt) {
  if (repElt.basis != Basis::PadicStd || sheafElt.basis != Basis::SheafPadicStd)
    throw std::invalid_argument("pairing_padic: expects standard bases");
  long long acc = 0;
  for (const auto& [l, c] : repElt.terms) {
    auto it = sheafElt.terms.find(l);
    if (it != sheafElt.terms.end())
      acc += c * it->second * par(orbit_dimension(std::get<Multisegment>(l)));
  }
  return acc;
}

KElement multiply_standards(const KElement& a, const KElement& b) {
  if (a.basis != Basis::PadicStd || b.basis != Basis::PadicStd)
    throw std::invalid_argument("multiply_standards: expects PadicStd");
  KElement r(Basis::PadicStd);
  for (const auto& [la, ca] : a.terms)
    for (const auto& [lb, cb] : b.terms)
      r.add(disjoint_union(std::get<Multisegment>(la), std::get<Multisegment>(lb)),
            ca * cb);
  return r;
}

namespace {

long long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

KElement bz_derivative(DSide side, const Rat& k, const KElement& a) {
  if (a.basis != Basis::PadicStd)
    throw std::invalid_argument("bz_derivative: expects PadicStd");
  KElement out(Basis::PadicStd);
  for (const auto& [l, coeff] : a.terms) {
    const Multisegment& m = std::get<Multisegment>(l);
    std::map<Segment, long, SegLess> groups;
    for (const Segment& s : m.segs) groups[s] += 1;
    // partial expansions: list of (segments chosen so far, coefficient)
    std::vector<std::pair<std::vector<Segment>, long long>> acc{{{}, 1}};
    for (const auto& [s, cnt] : groups) {
      bool hit = (side == DSide::Left) ? (s.b == k) : (s.a == k);
      std::vector<std::pair<std::vector<Segment>, long long>> next;
      if (!hit) {
        for (auto& [segs, c] : acc) {
          std::vector<Segment> v = segs;
          for (long t = 0; t < cnt; ++t) v.push_back(s);
          next.emplace_back(std::move(v), c);
        }
      } else {
        bool point = (s.a == s.b);
        Segment shorter = point ? s
                                : (side == DSide::Left ? Segment(s.a, Rat(s.b - 1))
                                                       : Segment(Rat(s.a + 1), s.b));
        for (long i = 0; i <= cnt; ++i) {
          long long bc = binom(cnt, i);
          for (auto& [segs, c] : acc) {
            std::vector<Segment> v = segs;
            for (long t = 0; t < cnt - i; ++t) v.push_back(s);
            if (!point)
              for (long t = 0; t < i; ++t) v.push_back(shorter);
            next.emplace_back(std::move(v), c * bc);
          }
        }
      }
      acc = std::move(next);
    }
    for (auto& [segs, c] : acc) out.add(Multisegment::of(std::move(segs)), coeff * c);
  }
  return out;
}

KElement project_weight(const KElement& a, const WeightFunction& phi) {
  if (a.basis != Basis::PadicStd && a.basis != Basis::PadicSimple &&
      a.basis != Basis::SheafPadicStd && a.basis != Basis::SheafPadicSimple)
    throw std::invalid_argument("project_weight: expects a p-adic element");
  KElement out(a.basis);
  for (const auto& [l, c] : a.terms)
    if (weight_of(std::get<Multisegment>(l)) == phi) out.add(l, c);
  return out;
}

KElement weyl_act(const std::pair<Perm, Perm>& uv, const KElement& a,
                  const RealBlock& block) {
  if (!block.regular())
    throw std::domain_error("weyl_act: defined on regular blocks only");
  if (a.basis != Basis::RealStd)
    throw std::invalid_argument("weyl_act: expects RealStd");
  Perm g = uv.first * uv.second.inverse();
  KElement out(Basis::RealStd);
  for (const auto& [l, c] : a.terms) out.add(g * std::get<Perm>(l), c);
  return out;
}

KElement convolve_act(const std::pair<Perm, Perm>& uv, const KElement& a,
                      const RealBlock& block) {
  if (!block.regular())
    throw std::domain_error("convolve_act: defined on regular blocks only");
  if (a.basis != Basis::SheafRealStd)
    throw std::invalid_argument("convolve_act: expects SheafRealStd");
  Perm g = uv.first * uv.second.inverse();
  KElement out(Basis::SheafRealStd);
  for (const auto& [l, c] : a.terms) out.add(std::get<Perm>(l) * g, c);
  return out;
}

}  // namespace segkl
