#include <algorithm>
#include <set>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "segkl/comparison.hpp"
#include "segkl/vogan.hpp"

using namespace segkl;

namespace {

Segment seg(long a, long b) { return Segment(Rat(a), Rat(b)); }

Multisegment ms(std::vector<Segment> v) { return Multisegment::of(std::move(v)); }

Perm pm(std::vector<int> v) { return Perm(std::move(v)); }

WeightFunction wf(std::vector<std::pair<long, long>> entries) {
  WeightFunction phi;
  for (const auto& [p, c] : entries) phi.v[Rat(p)] = c;
  return phi;
}

KElement unit(Basis b, const KLabel& l) {
  KElement e(b);
  e.add(l, 1);
  return e;
}

}  // namespace

TEST_CASE("tau reverses compositions and negates coordinates") {
  CHECK(tau_composition({2, 1, 1}) == Composition({1, 1, 2}));
  CHECK(tau_composition({3}) == Composition({3}));
  CHECK(tau_coordinates({Rat(3), Rat(1), Rat(0)}) ==
        std::vector<Rat>({Rat(0), Rat(-1), Rat(-3)}));
}

TEST_CASE("parabolic types of a unimodal weight") {
  SECTION("staircase with long top") {
    // Weight of [-1,4]+[-1,3]+[0,2]+[1,2]: values 2,3,4,4,2,1 on -1..4.
    WeightFunction phi = weight_of(
        ms({seg(-1, 4), seg(-1, 3), seg(0, 2), seg(1, 2)}));
    auto [pl, pr] = parabolics_from_weight(phi);
    CHECK(pl == Composition({2, 1, 1}));
    CHECK(pr == Composition({1, 1, 2}));
    CHECK(tau_composition(pr) == Composition({2, 1, 1}));
  }
  SECTION("constant weight gives the full block on both sides") {
    WeightFunction phi = wf({{0, 2}, {1, 2}, {2, 2}});
    auto [pl, pr] = parabolics_from_weight(phi);
    CHECK(pl == Composition({2}));
    CHECK(pr == Composition({2}));
  }
  SECTION("sum of each type is the segment count") {
    WeightFunction phi = wf({{0, 1}, {1, 3}, {2, 3}, {3, 2}});
    auto [pl, pr] = parabolics_from_weight(phi);
    long nl = 0, nr = 0;
    for (int c : pl) nl += c;
    for (int c : pr) nr += c;
    CHECK(nl == 3);
    CHECK(nr == 3);
    CHECK(pl == Composition({1, 2}));
    // Drops are collected from the far end inward, matching the coordinate
    // order of the infinitesimal character.
    CHECK(pr == Composition({2, 1}));
  }
}

TEST_CASE("infinitesimal character of a unimodal weight") {
  SECTION("two-segment hook") {
    // phi = (1,2,2): both segments cross the center 3/2; right ends tie.
    auto [lamL, lamR] = infchar_from_weight(wf({{0, 1}, {1, 2}, {2, 2}}), half(), -half());
    CHECK(lamL == std::vector<Rat>({Rat(5, 2), Rat(5, 2)}));
    CHECK(lamR == std::vector<Rat>({Rat(1, 2), Rat(-1, 2)}));
  }
  SECTION("a weight with no crossing center is rejected") {
    // phi = (1,2,1) would need two segments through a center of weight 2,
    // but only the middle point carries weight 2.
    CHECK_THROWS_AS(infchar_from_weight(wf({{0, 1}, {1, 2}, {2, 1}}), half(), -half()),
                    std::domain_error);
  }
  SECTION("flat offsets reproduce the bare endpoints") {
    // b = (4,3,3,3,2), all a = 0.
    WeightFunction phi =
        weight_of(ms({seg(0, 4), seg(0, 3), seg(0, 3), seg(0, 3), seg(0, 2)}));
    auto [lamL, lamR] = infchar_from_weight(phi, Rat(0), Rat(0));
    CHECK(lamL == std::vector<Rat>({Rat(4), Rat(3), Rat(3), Rat(3), Rat(2)}));
    CHECK(lamR == std::vector<Rat>(5, Rat(0)));
  }
  SECTION("nested endpoints pair antidominantly") {
    // phi = (1,2,2,1): open orbit [0,3]+[1,2]; shortest left end goes first.
    auto [lamL, lamR] =
        infchar_from_weight(wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}), half(), -half());
    CHECK(lamL == std::vector<Rat>({Rat(7, 2), Rat(5, 2)}));
    CHECK(lamR == std::vector<Rat>({Rat(1, 2), Rat(-1, 2)}));
  }
}

TEST_CASE("block data from an apart pair of lines") {
  ComparisonBlock b = block_data_from_infchar({Rat(7, 2), Rat(5, 2)}, {Rat(1, 2), Rat(-1, 2)});
  CHECK(b.n == 2);
  CHECK(b.phi.mass() == 6);
  CHECK(b.r == Rat(3, 2));
  CHECK(b.labels.size() == 2);
  CHECK(b.bm.at(Perm::identity(2)) == ms({seg(1, 3), seg(0, 2)}));
  CHECK(b.bm.at(pm({2, 1})) == ms({seg(0, 3), seg(1, 2)}));
  // The identity goes to the minimal full-rank orbit, the longest label to
  // the open orbit.
  CHECK(orbit_dimension(b.bm.at(pm({2, 1}))) == dim_ambient(b.phi));
}

TEST_CASE("block data rejects malformed lines") {
  CHECK_THROWS_AS(block_data_from_infchar({Rat(1)}, {Rat(0), Rat(-1)}),
                  std::invalid_argument);
  // Not apart: min lamL must exceed max lamR + 1.
  CHECK_THROWS_AS(block_data_from_infchar({Rat(1)}, {Rat(0)}), std::domain_error);
  // Non-integral difference.
  CHECK_THROWS_AS(block_data_from_infchar({Rat(5, 2)}, {Rat(0)}), std::domain_error);
}

TEST_CASE("empty lines give the one-parameter degenerate block") {
  ComparisonBlock b = block_data_from_infchar({}, {});
  CHECK(b.n == 0);
  CHECK(b.phi.mass() == 0);
  REQUIRE(b.labels.size() == 1);
  CHECK(b.bm.at(b.labels[0]) == Multisegment());
  CHECK(gamma_orbit(b, b.labels[0]).mass() == 0);
}

TEST_CASE("weight round trip through the block") {
  std::vector<WeightFunction> phis = {
      wf({{0, 1}, {1, 1}}), wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}),
      wf({{0, 2}, {1, 2}, {2, 2}}), wf({{0, 1}, {1, 3}, {2, 3}, {3, 2}})};
  for (const WeightFunction& phi : phis) {
    ComparisonBlock b = block_from_weight(phi);
    CHECK(b.phi == phi);
    // Parameters recompute from the weight.
    auto [lamL, lamR] = infchar_from_weight(phi, half(), -half());
    CHECK(b.lamL == lamL);
    CHECK(b.lamR == lamR);
  }
}

TEST_CASE("the orbit map is a weight-preserving bijection") {
  std::vector<WeightFunction> phis = {
      wf({{0, 1}, {1, 1}}), wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}),
      wf({{0, 2}, {1, 2}, {2, 2}}), wf({{0, 2}, {1, 3}, {2, 3}, {3, 2}})};
  for (const WeightFunction& phi : phis) {
    ComparisonBlock b = block_from_weight(phi);
    std::set<Multisegment> seen;
    for (const Perm& w : b.labels) {
      Multisegment m = b.bm.at(w);
      CHECK(weight_of(m) == phi);
      CHECK(is_full_rank(m));
      CHECK(seen.insert(m).second);  // injective
      CHECK(b.orbit_label.at(m) == w);
      CHECK(gamma_orbit(b, w) == m);
    }
    // Surjective onto full-rank orbits.
    long fullrank = 0;
    for (const Multisegment& m : enumerate_multisegments(phi))
      if (is_full_rank(m)) ++fullrank;
    CHECK(static_cast<long>(seen.size()) == fullrank);
    std::vector<Multisegment> listed = fullrank_orbits(b);
    CHECK(std::set<Multisegment>(listed.begin(), listed.end()) == seen);
    CHECK(std::is_sorted(listed.begin(), listed.end()));
  }
}

TEST_CASE("the orbit map does not depend on the representative") {
  ComparisonBlock b = block_from_weight(wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
  for (const Perm& w : all_perms(static_cast<int>(b.n)))
    CHECK(gamma_orbit(b, w) == b.bm.at(b.real.rep_label_of(w)));
}

TEST_CASE("the bijection matches the two closure orders") {
  std::vector<WeightFunction> phis = {
      wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}), wf({{0, 2}, {1, 2}, {2, 2}}),
      wf({{0, 1}, {1, 3}, {2, 3}, {3, 2}}), wf({{0, 2}, {1, 3}, {2, 3}, {3, 2}})};
  for (const WeightFunction& phi : phis) {
    ComparisonBlock b = block_from_weight(phi);
    for (const Perm& v : b.labels)
      for (const Perm& w : b.labels) {
        bool orbitOrder = closure_leq(b.bm.at(v), b.bm.at(w));
        bool cosetOrder =
            bruhat_leq(b.real.rep_to_sheaf(v), b.real.rep_to_sheaf(w));
        INFO(v.str() << " vs " << w.str());
        CHECK(orbitOrder == cosetOrder);
      }
    // Identity label carries the minimal full-rank orbit.
    Perm e = Perm::identity(static_cast<int>(b.n));
    for (const Perm& w : b.labels) CHECK(closure_leq(b.bm.at(e), b.bm.at(w)));
  }
}

TEST_CASE("gamma on standards relabels terms") {
  ComparisonBlock b = block_from_weight(wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
  KElement x(Basis::RealStd);
  x.add(b.labels[0], 2);
  x.add(b.labels[1], -1);
  KElement y = gamma_std(b, x);
  CHECK(y.basis == Basis::PadicStd);
  CHECK(y.terms.at(KLabel(b.bm.at(b.labels[0]))) == 2);
  CHECK(y.terms.at(KLabel(b.bm.at(b.labels[1]))) == -1);
  CHECK_THROWS_AS(gamma_std(b, KElement(Basis::PadicStd)), std::invalid_argument);
}

TEST_CASE("zeta sends labels both ways") {
  ComparisonBlock b = block_from_weight(wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
  for (const Perm& w : b.labels) CHECK(zeta_orbit_inv(b, zeta_orbit(b, w)) == w);
  // Outside the full-rank image: [0,1]+[1,3]+[2,2] has three segments.
  Multisegment low = ms({seg(0, 1), seg(1, 3), seg(2, 2)});
  CHECK(weight_of(low) == b.phi);
  CHECK_FALSE(is_full_rank(low));
  CHECK_THROWS_AS(zeta_orbit_inv(b, low), std::invalid_argument);
}

TEST_CASE("sheaf pullback matches signs and kills low orbits") {
  ComparisonBlock b = block_from_weight(wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
  SECTION("full-rank standards map with the parity twist") {
    for (const Perm& w : b.labels) {
      Multisegment m = b.bm.at(w);
      Perm v = b.real.rep_to_sheaf(w);
      KElement got = zeta_pullback(b, unit(Basis::SheafPadicStd, m));
      long sign = (orbit_dimension(m) + b.real.dimZ(v)) % 2 == 0 ? 1 : -1;
      KElement want(Basis::SheafRealStd);
      want.add(v, sign);
      INFO("w=" << w.str());
      CHECK(got == want);
    }
  }
  SECTION("non-full-rank orbits map to zero") {
    Multisegment low = ms({seg(0, 1), seg(1, 3), seg(2, 2)});
    KElement got = zeta_pullback(b, unit(Basis::SheafPadicStd, low));
    CHECK(got.terms.empty());
  }
  SECTION("linearity") {
    Multisegment m0 = b.bm.at(b.labels[0]);
    Multisegment low = ms({seg(0, 1), seg(1, 3), seg(2, 2)});
    KElement mix = unit(Basis::SheafPadicStd, m0);
    mix.add(low, 5);
    CHECK(zeta_pullback(b, mix) == zeta_pullback(b, unit(Basis::SheafPadicStd, m0)));
  }
}

TEST_CASE("gamma is adjoint to the pullback under the pairings") {
  std::vector<WeightFunction> phis = {wf({{0, 1}, {1, 1}}),
                                      wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}),
                                      wf({{0, 2}, {1, 2}, {2, 2}})};
  for (const WeightFunction& phi : phis) {
    ComparisonBlock b = block_from_weight(phi);
    KLContext ctx(static_cast<int>(b.n));
    for (const Perm& w : b.labels) {
      KElement x = unit(Basis::RealStd, w);
      for (const Multisegment& m : enumerate_multisegments(phi)) {
        KElement f = unit(Basis::SheafPadicStd, m);
        long long lhs = pairing_padic(gamma_std(b, x), f);
        long long rhs = pairing(x, zeta_pullback(b, f), b.real, ctx);
        INFO("w=" << w.str() << " m=" << m.str());
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("p-adic change of basis transports the real one") {
  std::vector<WeightFunction> phis = {wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}),
                                      wf({{0, 2}, {1, 2}, {2, 2}})};
  for (const WeightFunction& phi : phis) {
    ComparisonBlock b = block_from_weight(phi);
    KLContext ctx(static_cast<int>(b.n));
    Mat rep = padic_std_to_simple(b, Side::Rep, ctx);
    Mat sheaf = padic_std_to_simple(b, Side::Sheaf, ctx);
    size_t N = fullrank_orbits(b).size();
    REQUIRE(rep.rows == N);
    REQUIRE(sheaf.rows == N);
    // Unitriangular with nonnegative entries on the rep side.
    for (size_t i = 0; i < N; ++i) {
      CHECK(rep.at(i, i) == Rat(1));
      CHECK(sheaf.at(i, i) == Rat(1));
      for (size_t j = 0; j < N; ++j) CHECK(rep.at(i, j) >= Rat(0));
    }
  }
}
