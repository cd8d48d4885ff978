#pragma once

#include <set>
#include <vector>

#include "segkl/perm.hpp"

namespace segkl {

// A standard parabolic subset: simple reflection indices in {1..n-1}.
using ParabSet = std::set<int>;

// Block sizes of the Levi, left to right.
using Composition = std::vector<int>;

Composition set_to_composition(const ParabSet& J, int n);
ParabSet composition_to_set(const Composition& c);

// Simple reflections fixing a weakly decreasing coordinate vector.
ParabSet stabilizer_set(const std::vector<Rat>& lam);
bool is_dominant(const std::vector<Rat>& lam);  // weakly decreasing

std::vector<Perm> parabolic_elements(const ParabSet& J, int n);
Perm longest_parabolic(const ParabSet& J, int n);  // per-block reversal

/* Double cosets W_J w W_K.  Each coset has a unique minimal and a unique
 * maximal element; the minimal one is the label.  Closure order on the
 * corresponding orbits is Bruhat order on minimal representatives. */
Perm min_coset_rep(Perm w, const ParabSet& J, const ParabSet& K);
Perm max_coset_rep(const Perm& wmin, const ParabSet& J, const ParabSet& K);
std::vector<Perm> double_cosets(const ParabSet& J, const ParabSet& K, int n);
std::vector<Perm> coset_elements(const Perm& wmin, const ParabSet& J,
                                 const ParabSet& K, int n);

/* Dimension of the orbit labeled by w on the product of the two partial
 * flag varieties: n^2 - n - #{roots alpha of P_J with w^{-1} alpha a root
 * of P_K}, where the roots of P_J are all positive roots together with the
 * negative roots of its Levi.  Independent of the representative. */
long dim_orbit_pair(const ParabSet& J, const ParabSet& K, const Perm& w);

}  // namespace segkl
