#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "segkl/kl.hpp"
#include "segkl/multisegment.hpp"
#include "segkl/parabolic.hpp"
#include "segkl/ratmat.hpp"
#include "segkl/vogan.hpp"

namespace segkl {

/* Bases of the four K-groups in play.  "Real" elements live on a block of
 * principal series parameters, labeled by double cosets; "Padic" elements
 * are labeled by multisegments.  Sheaf bases are the geometric duals. */
enum class Basis {
  RealStd,
  RealSimple,
  PadicStd,
  PadicSimple,
  SheafRealStd,
  SheafRealSimple,
  SheafPadicStd,
  SheafPadicSimple,
};

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

using KLabel = std::variant<Multisegment, Perm>;

struct KElement {
  Basis basis = Basis::PadicStd;
  std::map<KLabel, long long> terms;

  KElement() = default;
  explicit KElement(Basis b) : basis(b) {}

  void add(const KLabel& l, long long c);
  bool operator==(const KElement& o) const {
    return basis == o.basis && terms == o.terms;
  }
  std::string str() const;
};

KElement operator+(const KElement& a, const KElement& b);
KElement scale(long long c, const KElement& a);

/* A block of parameters (lamL, lamR), both weakly decreasing within their
 * coordinate lines.  Standard modules are labeled by double cosets
 * W(lamL) \ W / W(lamR); the dual sheaf side uses the inverse coset space
 * W(lamR) \ W / W(lamL).  All labels are minimal representatives. */
struct RealBlock {
  std::vector<Rat> lamL, lamR;
  int n = 0;
  ParabSet JL, JR;

  static RealBlock of(std::vector<Rat> lamL, std::vector<Rat> lamR);

  bool regular() const { return JL.empty() && JR.empty(); }
  std::vector<Perm> rep_labels() const;
  std::vector<Perm> sheaf_labels() const;
  Perm rep_label_of(const Perm& w) const;    // min rep in (JL, JR)
  Perm sheaf_label_of(const Perm& w) const;  // min rep in (JR, JL)
  Perm rep_to_sheaf(const Perm& w) const;    // label of w^{-1}
  Perm sheaf_to_rep(const Perm& v) const;
  long dimZ(const Perm& sheafLabel) const;
};

/* Pairing between the representation side and the sheaf side of one real
 * block: <X_w, M_v> = (-1)^{dim Z_v} when v labels the inverse coset of w,
 * else 0; simples are converted to standards first. */
long long pairing(const KElement& repElt, const KElement& sheafElt,
                  const RealBlock& block, KLContext& ctx);

// P-adic standard/costandard pairing: <X_m, M_n'> = (-1)^{dim O_n'} delta.
long long pairing_padic(const KElement& repElt, const KElement& sheafElt);

enum class Side { Rep, Sheaf };

/* Change of basis on one real block: column w of std_to_simple expands the
 * standard labeled w into simples.  Sheaf entries are Euler classes: the
 * Kazhdan-Lusztig value at q=1 taken at the longest representative, summed
 * with alternating signs over the fiber coset of the column's orbit.  On a
 * regular block the coset is a singleton and the entry is a plain KL value;
 * on singular blocks entries may be negative (the extension by zero of a
 * non-affinely embedded orbit is a virtual class).  The representation side
 * is forced from the sheaf side by duality and is computed here by an exact
 * linear solve; its entries are always nonnegative.  Rows and columns
 * follow rep_labels()/sheaf_labels(). */
Mat std_to_simple(const RealBlock& block, Side side, KLContext& ctx);
Mat simple_to_std(const RealBlock& block, Side side, KLContext& ctx);

// Product of standards on the p-adic side: multiset union of labels.
KElement multiply_standards(const KElement& a, const KElement& b);

enum class DSide { Left, Right };

/* Derivative operator on the span of p-adic standards, acting on one
 * generator through
 *   left,  degree k:  [a,b] -> [a,b] + [a,b-1]  when b = k   (drop [a,b-1]
 *                      when a = b, keeping the constant term),
 *   right, degree k:  [a,b] -> [a,b] + [a+1,b]  when a = k,
 * and multiplicatively on products of generators. */
KElement bz_derivative(DSide side, const Rat& k, const KElement& a);

// Keep only the terms of the given weight.
KElement project_weight(const KElement& a, const WeightFunction& phi);

/* Coherent-continuation action of W x W on a regular real block and the
 * dual convolution action on its sheaf side.  The pair (u,v) sends the
 * standard labeled w to the one labeled u v^{-1} w, and the sheaf standard
 * labeled x to the one labeled x u v^{-1}. */
KElement weyl_act(const std::pair<Perm, Perm>& uv, const KElement& a,
                  const RealBlock& block);
KElement convolve_act(const std::pair<Perm, Perm>& uv, const KElement& a,
                      const RealBlock& block);

}  // namespace segkl
