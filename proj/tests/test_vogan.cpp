#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "segkl/vogan.hpp"

using namespace segkl;

namespace {

Segment seg(long a, long b) { return Segment(Rat(a), Rat(b)); }

Multisegment ms(std::vector<Segment> v) { return Multisegment::of(std::move(v)); }

std::vector<WeightFunction> line_weights(long mass) {
  std::vector<WeightFunction> out;
  std::vector<long> parts;
  std::function<void(long)> rec = [&](long left) {
    if (left == 0) {
      WeightFunction phi;
      for (size_t i = 0; i < parts.size(); ++i) phi.v[Rat(static_cast<long>(i))] = parts[i];
      out.push_back(std::move(phi));
      return;
    }
    for (long c = 1; c <= left; ++c) {
      parts.push_back(c);
      rec(left - c);
      parts.pop_back();
    }
  };
  rec(mass);
  return out;
}

}  // namespace

TEST_CASE("ambient dimension of the graded operator space") {
  WeightFunction phi;
  phi.v[Rat(0)] = 2;
  phi.v[Rat(1)] = 3;
  phi.v[Rat(2)] = 1;
  CHECK(dim_ambient(phi) == 2 * 3 + 3 * 1);
  WeightFunction point;
  point.v[Rat(5)] = 4;
  CHECK(dim_ambient(point) == 0);
}

TEST_CASE("jordan representative has the declared type") {
  for (long mass = 1; mass <= 6; ++mass)
    for (const WeightFunction& phi : line_weights(mass))
      for (const Multisegment& m : enumerate_multisegments(phi)) {
        GradedOperator T = jordan_rep(m);
        CHECK(T.dims == phi);
        INFO(m.str());
        CHECK(jordan_type(T) == m);
      }
}

TEST_CASE("jordan type of a dense operator is the open orbit") {
  // T_0 = [1 1], a 1x2 block of full rank: one chain survives into degree 1
  // and the kernel leaves a length-one chain at degree 0, so the type is
  // [0,1]+[0].
  GradedOperator T;
  T.dims.v[Rat(0)] = 2;
  T.dims.v[Rat(1)] = 1;
  Mat t(1, 2);
  t.at(0, 0) = Rat(1);
  t.at(0, 1) = Rat(1);
  T.blocks.emplace(Rat(0), t);
  CHECK(jordan_type(T) == ms({seg(0, 1), seg(0, 0)}));
}

TEST_CASE("frozen orbit dimensions") {
  CHECK(orbit_dimension(ms({seg(0, 0)})) == 0);
  CHECK(orbit_dimension(ms({seg(0, 1)})) == 1);
  CHECK(orbit_dimension(ms({seg(0, 1), seg(1, 1)})) == 2);
  CHECK(orbit_dimension(ms({seg(0, 1), seg(1, 2)})) == 3);
  CHECK(orbit_dimension(ms({seg(0, 2), seg(1, 1)})) == 4);
}

TEST_CASE("orbit dimension agrees with the hom-counting oracle") {
  for (long mass = 1; mass <= 6; ++mass)
    for (const WeightFunction& phi : line_weights(mass))
      for (const Multisegment& m : enumerate_multisegments(phi)) {
        INFO(m.str());
        CHECK(orbit_dimension(m) == oracles::orbit_dim_oracle(m));
      }
}

TEST_CASE("the unique open orbit fills the ambient space") {
  for (long mass = 1; mass <= 6; ++mass)
    for (const WeightFunction& phi : line_weights(mass)) {
      std::vector<Multisegment> all = enumerate_multisegments(phi);
      long amb = dim_ambient(phi);
      long opens = 0;
      for (const Multisegment& m : all)
        if (orbit_dimension(m) == amb) ++opens;
      CHECK(opens == 1);
    }
}

TEST_CASE("dimension strictly increases along covering moves") {
  for (long mass = 2; mass <= 6; ++mass)
    for (const WeightFunction& phi : line_weights(mass))
      for (const Multisegment& m : enumerate_multisegments(phi))
        for (const Multisegment& n : elementary_moves(m)) {
          INFO(m.str() << " -> " << n.str());
          CHECK(orbit_dimension(n) > orbit_dimension(m));
          CHECK(closure_leq(m, n));
        }
}

TEST_CASE("full rank picks out multisegments with n segments per piece") {
  // phi = (1,2,2,1): unimodal with center 3/2 and n = 2.
  WeightFunction phi;
  phi.v[Rat(0)] = 1;
  phi.v[Rat(1)] = 2;
  phi.v[Rat(2)] = 2;
  phi.v[Rat(3)] = 1;
  long fullrank = 0, total = 0;
  for (const Multisegment& m : enumerate_multisegments(phi)) {
    ++total;
    if (is_full_rank(m)) ++fullrank;
  }
  CHECK(total > fullrank);
  CHECK(fullrank > 0);
  CHECK(is_full_rank(ms({seg(0, 3), seg(1, 2)})));
  CHECK(is_full_rank(ms({seg(0, 2), seg(1, 3)})));
  CHECK_FALSE(is_full_rank(ms({seg(0, 3), seg(1, 1), seg(2, 2)})));
}

TEST_CASE("full rank requires the unimodality assumption") {
  CHECK_THROWS_AS(is_full_rank(ms({seg(0, 0)})), std::domain_error);
}
