#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "segkl/parabolic.hpp"
#include "segkl/perm.hpp"

namespace segkl {

// Polynomial in q with integer coefficients, ascending powers.
struct Poly {
  std::vector<long long> c;

  Poly() = default;
  explicit Poly(std::vector<long long> v) : c(std::move(v)) { trim(); }
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly({1}); }
  static Poly q() { return Poly({0, 1}); }

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[static_cast<size_t>(k)] : 0;
  }
  long long at_one() const;
  bool operator==(const Poly& o) const { return c == o.c; }
  std::string str() const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly shift(const Poly& a, int k);  // multiply by q^k

/* Memoized Kazhdan-Lusztig polynomials P_{x,w} for S_n, by the classical
 * recursion on a right descent of w.  A context caches one symmetric group
 * at a time and can load and store its table as text lines
 *   n x w : c0 c1 ...
 * with one-line permutation codes and ascending coefficients. */
class KLContext {
 public:
  explicit KLContext(int n) : n_(n) {}

  int n() const { return n_; }
  const Poly& kl(const Perm& x, const Perm& w);
  long long kl_at_one(const Perm& x, const Perm& w) { return kl(x, w).at_one(); }
  // coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}
  long long mu(const Perm& x, const Perm& w);

  void save_cache(std::ostream& out) const;
  size_t load_cache(std::istream& in);  // ignores lines for other n

 private:
  int n_;
  std::map<std::pair<Perm, Perm>, Poly> memo_;
};

/* The signed group-algebra element sum_{w in W_J} (-1)^{l(w_J)-l(w)} w,
 * the q=1 specialization of the self-dual basis element attached to the
 * longest element of W_J. */
std::map<Perm, long long> kl_basis_at_one(const ParabSet& J, int n);

// Same element computed from the KL table, for cross-checking.
std::map<Perm, long long> kl_basis_at_one_via_table(const ParabSet& J, int n,
                                                    KLContext& ctx);

// Hecke algebra of S_n in the standard basis {T_w} with
// T_s^2 = (q-1) T_s + q.
using HeckeElt = std::map<Perm, Poly>;

HeckeElt hecke_unit(const Perm& w);
HeckeElt hecke_multiply(const HeckeElt& a, const HeckeElt& b);
std::map<Perm, long long> hecke_specialize_q1(const HeckeElt& a);

}  // namespace segkl
