#pragma once

#include <string>
#include <vector>

#include "segkl/rational.hpp"

namespace segkl {

// Permutation of {1..n} in one-line notation; p[i-1] is the image of i.
struct Perm {
  std::vector<int> p;

  Perm() = default;
  explicit Perm(std::vector<int> v) : p(std::move(v)) {}
  static Perm identity(int n);
  static Perm simple(int i, int n);   // the transposition (i, i+1)
  static Perm longest(int n);         // i -> n+1-i

  int n() const { return static_cast<int>(p.size()); }
  int operator()(int i) const { return p[i - 1]; }
  Perm inverse() const;
  long length() const;               // inversion count
  bool operator==(const Perm& o) const { return p == o.p; }
  bool operator!=(const Perm& o) const { return p != o.p; }
  bool operator<(const Perm& o) const { return p < o.p; }
  std::string str() const;           // one-line, e.g. "3412"
};

// Composition as functions: (u*v)(i) = u(v(i)).
Perm operator*(const Perm& u, const Perm& v);

// Place action on coordinate vectors: (w.lam)_{w(i)} = lam_i, so the
// stabilizer of a weakly decreasing vector is a standard parabolic.
std::vector<Rat> act(const Perm& w, const std::vector<Rat>& lam);

bool right_descent(const Perm& w, int i);  // w s_i < w
bool left_descent(const Perm& w, int i);   // s_i w < w

/* Bruhat order by the sorted-prefix criterion: x <= w iff for every k the
 * ascending sort of {x(1..k)} is entrywise <= that of {w(1..k)}. */
bool bruhat_leq(const Perm& x, const Perm& w);

std::vector<Perm> all_perms(int n);

// A reduced word for w, as simple reflection indices.
std::vector<int> reduced_word(const Perm& w);

int sign_of_length(const Perm& w);  // (-1)^{length}

}  // namespace segkl
