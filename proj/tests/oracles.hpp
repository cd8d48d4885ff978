#pragma once

/* Independent reference implementations used to cross-check the library.
 * Everything here is written for clarity over speed and stays deliberately
 * naive: different recursions, different data flow, no sharing with the
 * code under test beyond elementary types. */

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "segkl/kl.hpp"
#include "segkl/multisegment.hpp"
#include "segkl/parabolic.hpp"
#include "segkl/perm.hpp"

namespace oracles {

using segkl::Composition;
using segkl::Multisegment;
using segkl::Perm;
using segkl::Poly;
using segkl::Rat;
using segkl::Segment;
using segkl::WeightFunction;

/* Exhaustive multisegment enumeration: list every candidate segment inside
 * the support, then try every multiplicity vector whose total point count
 * works out, keeping exact matches only. */
inline std::set<Multisegment> brute_multisegments(const WeightFunction& phi) {
  std::vector<Segment> cands;
  for (const auto& [a, ca] : phi.v)
    for (const auto& [b, cb] : phi.v) {
      if (b < a || !segkl::is_integer(Rat(b - a))) continue;
      bool inside = true;
      for (Rat p = a; p <= b; p += 1)
        if (phi(p) == 0) inside = false;
      if (inside) cands.emplace_back(a, b);
    }
  std::set<Multisegment> out;
  std::vector<Segment> cur;
  std::map<Rat, long> rem = phi.v;
  long massLeft = phi.mass();
  std::function<void(size_t)> rec = [&](size_t i) {
    if (massLeft == 0) {
      for (const auto& [p, c] : rem)
        if (c != 0) return;
      out.insert(Multisegment::of(cur));
      return;
    }
    if (i == cands.size()) return;
    long most = massLeft / cands[i].num_points();
    for (Rat p = cands[i].a; p <= cands[i].b; p += 1)
      most = std::min(most, rem[p]);
    for (long copies = most; copies >= 0; --copies) {
      for (long t = 0; t < copies; ++t) {
        cur.push_back(cands[i]);
        for (Rat p = cands[i].a; p <= cands[i].b; p += 1) rem[p] -= 1;
        massLeft -= cands[i].num_points();
      }
      rec(i + 1);
      for (long t = 0; t < copies; ++t) {
        cur.pop_back();
        for (Rat p = cands[i].a; p <= cands[i].b; p += 1) rem[p] += 1;
        massLeft += cands[i].num_points();
      }
    }
  };
  rec(0);
  return out;
}

/* Orbit dimension through hom spaces of interval representations: the
 * ambient group has dimension sum phi(p)^2 and the stabilizer of a point
 * with Jordan data m has dimension equal to the number of ordered segment
 * pairs (S, T) admitting a nonzero intertwiner, which for intervals on one
 * line happens exactly when T.a <= S.a <= T.b <= S.b. */
inline long orbit_dim_oracle(const Multisegment& m) {
  WeightFunction phi = weight_of(m);
  long group = 0;
  for (const auto& [p, c] : phi.v) group += c * c;
  long endo = 0;
  for (const Segment& S : m.segs)
    for (const Segment& T : m.segs)
      if (S.same_coset(T) && T.a <= S.a && S.a <= T.b && T.b <= S.b) ++endo;
  return group - endo;
}

/* Stratum dimension by counting matrix positions of the stabilizer: the
 * pair (P_J, w P_K w^{-1}) is stabilized by their intersection, and a
 * coordinate E_{ab} lies in it iff both block conditions hold. */
inline long dimZ_oracle(const Composition& compJ, const Composition& compK,
                        const Perm& w) {
  auto blocks = [](const Composition& comp) {
    std::vector<int> b;
    int k = 0;
    for (int part : comp) {
      for (int i = 0; i < part; ++i) b.push_back(k);
      ++k;
    }
    return b;
  };
  std::vector<int> bJ = blocks(compJ), bK = blocks(compK);
  int n = static_cast<int>(bJ.size());
  Perm wi = w.inverse();
  long stab = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (bJ[a - 1] <= bJ[b - 1] && bK[wi(a) - 1] <= bK[wi(b) - 1]) ++stab;
  return static_cast<long>(n) * n - stab;
}

/* Kazhdan-Lusztig polynomials the slow way: R-polynomials by the descent
 * recursion, then P by peeling the low-degree half of the inversion
 * identity   q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum_z R_{x,z} P_{z,w}
 * by downward induction on l(w) - l(x). */
class KLOracle {
 public:
  explicit KLOracle(int n) : all_(segkl::all_perms(n)) {}

  const Poly& rpoly(const Perm& x, const Perm& w) {
    auto key = std::make_pair(x, w);
    auto it = r_.find(key);
    if (it != r_.end()) return it->second;
    Poly val;
    if (x == w) {
      val = Poly::one();
    } else if (!bruhat_leq(x, w)) {
      val = Poly::zero();
    } else {
      int i = 0;
      while (!right_descent(w, i + 1)) ++i;
      Perm s = Perm::simple(i + 1, w.n());
      Perm ws = w * s, xs = x * s;
      if (xs.length() < x.length())
        val = rpoly(xs, ws);
      else
        val = (Poly::q() - Poly::one()) * rpoly(x, ws) + Poly::q() * rpoly(xs, ws);
    }
    return r_.emplace(key, std::move(val)).first->second;
  }

  const Poly& kl(const Perm& x, const Perm& w) {
    auto key = std::make_pair(x, w);
    auto it = p_.find(key);
    if (it != p_.end()) return it->second;
    Poly val;
    if (x == w) {
      val = Poly::one();
    } else if (!bruhat_leq(x, w)) {
      val = Poly::zero();
    } else {
      Poly u;
      for (const Perm& z : all_)
        if (!(z == x) && bruhat_leq(x, z) && bruhat_leq(z, w))
          u = u + rpoly(x, z) * kl(z, w);
      int d = w.length() - x.length();
      std::vector<long long> coeffs;
      for (int i = 0; 2 * i <= d - 1; ++i) coeffs.push_back(-u.coeff(i));
      val = Poly(std::move(coeffs));
    }
    return p_.emplace(key, std::move(val)).first->second;
  }

 private:
  std::vector<Perm> all_;
  std::map<std::pair<Perm, Perm>, Poly> r_, p_;
};

// Bruhat order from scratch: x <= w iff x = w or x <= some coatom of w,
// with coatoms produced by all length-lowering transpositions.
inline bool bruhat_leq_oracle(const Perm& x, const Perm& w) {
  if (x.length() > w.length()) return false;
  if (x == w) return true;
  int n = w.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Perm t = w;
      std::swap(t.p[static_cast<size_t>(i - 1)], t.p[static_cast<size_t>(j - 1)]);
      if (t.length() == w.length() - 1 && bruhat_leq_oracle(x, t)) return true;
    }
  return false;
}

}  // namespace oracles
