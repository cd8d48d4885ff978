#include "segkl/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace segkl {

Composition set_to_composition(const ParabSet& J, int n) {
  Composition c;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (J.count(i)) {
      ++run;
    } else {
      c.push_back(run);
      run = 1;
    }
  }
  c.push_back(run);
  return c;
}

ParabSet composition_to_set(const Composition& c) {
  ParabSet J;
  int pos = 0;
  for (size_t b = 0; b < c.size(); ++b) {
    for (int i = 1; i < c[b]; ++i) J.insert(pos + i);
    pos += c[b];
  }
  return J;
}

bool is_dominant(const std::vector<Rat>& lam) {
  for (size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1]) return false;
  return true;
}

ParabSet stabilizer_set(const std::vector<Rat>& lam) {
  if (!is_dominant(lam))
    throw std::invalid_argument("stabilizer_set: vector not weakly decreasing");
  ParabSet J;
  for (size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] == lam[i + 1]) J.insert(static_cast<int>(i) + 1);
  return J;
}

std::vector<Perm> parabolic_elements(const ParabSet& J, int n) {
  Composition c = set_to_composition(J, n);
  std::vector<Perm> out;
  for (const Perm& w : all_perms(n)) {
    // w lies in W_J iff it permutes within the Levi blocks
    bool ok = true;
    int lo = 1;
    for (int blk : c) {
      for (int i = lo; i < lo + blk && ok; ++i)
        if (w(i) < lo || w(i) >= lo + blk) ok = false;
      lo += blk;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

Perm longest_parabolic(const ParabSet& J, int n) {
  Composition c = set_to_composition(J, n);
  std::vector<int> v(n);
  int lo = 1;
  for (int blk : c) {
    for (int i = 0; i < blk; ++i) v[lo - 1 + i] = lo + blk - 1 - i;
    lo += blk;
  }
  return Perm(std::move(v));
}

Perm min_coset_rep(Perm w, const ParabSet& J, const ParabSet& K) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J)
      if (left_descent(w, i)) {
        w = Perm::simple(i, w.n()) * w;
        moved = true;
      }
    for (int i : K)
      if (right_descent(w, i)) {
        w = w * Perm::simple(i, w.n());
        moved = true;
      }
  }
  return w;
}

std::vector<Perm> coset_elements(const Perm& wmin, const ParabSet& J,
                                 const ParabSet& K, int n) {
  std::set<Perm> seen;
  for (const Perm& u : parabolic_elements(J, n))
    for (const Perm& v : parabolic_elements(K, n)) seen.insert(u * wmin * v);
  return std::vector<Perm>(seen.begin(), seen.end());
}

Perm max_coset_rep(const Perm& wmin, const ParabSet& J, const ParabSet& K) {
  Perm best = wmin;
  long blen = wmin.length();
  for (const Perm& w : coset_elements(wmin, J, K, wmin.n())) {
    long l = w.length();
    if (l > blen) {
      best = w;
      blen = l;
    }
  }
  return best;
}

std::vector<Perm> double_cosets(const ParabSet& J, const ParabSet& K, int n) {
  std::set<Perm> reps;
  for (const Perm& w : all_perms(n)) reps.insert(min_coset_rep(w, J, K));
  return std::vector<Perm>(reps.begin(), reps.end());
}

long dim_orbit_pair(const ParabSet& J, const ParabSet& K, const Perm& w) {
  int n = w.n();
  Composition cJ = set_to_composition(J, n), cK = set_to_composition(K, n);
  // block index of each position for both Levis
  std::vector<int> bJ(n + 1), bK(n + 1);
  int pos = 1;
  for (size_t b = 0; b < cJ.size(); ++b)
    for (int t = 0; t < cJ[b]; ++t) bJ[pos++] = static_cast<int>(b);
  pos = 1;
  for (size_t b = 0; b < cK.size(); ++b)
    for (int t = 0; t < cK[b]; ++t) bK[pos++] = static_cast<int>(b);
  Perm wi = w.inverse();
  // roots are ordered pairs (i,j), i != j, meaning e_i - e_j
  long common = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      bool inJ = (i < j) || (bJ[i] == bJ[j]);
      if (!inJ) continue;
      int wi_i = wi(i), wi_j = wi(j);
      bool inK = (wi_i < wi_j) || (bK[wi_i] == bK[wi_j]);
      if (inK) ++common;
    }
  return static_cast<long>(n) * n - n - common;
}

}  // namespace segkl
