#include <algorithm>
#include <set>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "segkl/multisegment.hpp"

using namespace segkl;

namespace {

Segment seg(long a, long b) { return Segment(Rat(a), Rat(b)); }

Multisegment ms(std::vector<Segment> v) { return Multisegment::of(std::move(v)); }

WeightFunction wf(std::vector<std::pair<long, long>> entries) {
  WeightFunction phi;
  for (const auto& [p, c] : entries) phi.v[Rat(p)] = c;
  return phi;
}

// Single-line weights with the given total mass, as value sequences
// starting at 0: every composition of the mass.
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

TEST_CASE("segment validity and point counting") {
  CHECK(seg(0, 2).num_points() == 3);
  CHECK(seg(1, 1).num_points() == 1);
  CHECK(Segment(Rat(1, 2), Rat(5, 2)).num_points() == 3);
  CHECK_THROWS_AS(Segment(Rat(1), Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(Segment(Rat(0), Rat(1, 2)), std::invalid_argument);
  CHECK(seg(0, 2).contains(seg(1, 1)));
  CHECK_FALSE(seg(1, 1).contains(seg(0, 2)));
  CHECK(seg(0, 2).contains_point(Rat(1)));
  CHECK_FALSE(seg(0, 2).contains_point(Rat(1, 2)));
  CHECK(seg(0, 1).same_coset(seg(5, 7)));
  CHECK_FALSE(seg(0, 1).same_coset(Segment(Rat(1, 2), Rat(3, 2))));
}

TEST_CASE("canonical segment order sorts by endpoint sum then right end") {
  Multisegment m = ms({seg(1, 1), seg(0, 2), seg(1, 2), seg(0, 1)});
  std::vector<Segment> want = {seg(1, 2), seg(0, 2), seg(1, 1), seg(0, 1)};
  CHECK(m.segs == want);
  CHECK(m.str() == "[1,2]+[0,2]+[1]+[0,1]");
  CHECK(ms({seg(0, 1), seg(0, 1)}).str() == "2[0,1]");
}

TEST_CASE("weight of a multisegment counts covers") {
  WeightFunction phi = weight_of(ms({seg(0, 2), seg(1, 1)}));
  CHECK(phi(Rat(0)) == 1);
  CHECK(phi(Rat(1)) == 2);
  CHECK(phi(Rat(2)) == 1);
  CHECK(phi(Rat(3)) == 0);
  CHECK(phi.mass() == 4);
  CHECK(weight_of(Multisegment()).mass() == 0);
}

TEST_CASE("linkage needs incomparability and a joined union") {
  CHECK(is_linked(seg(0, 1), seg(1, 2)));
  CHECK(is_linked(seg(1, 2), seg(0, 1)));
  CHECK(is_linked(seg(0, 1), seg(2, 2)));  // adjacent: union is [0,2]
  CHECK_FALSE(is_linked(seg(0, 2), seg(1, 1)));  // containment
  CHECK_FALSE(is_linked(seg(0, 1), seg(0, 1)));  // equal
  CHECK_FALSE(is_linked(seg(0, 1), seg(3, 4)));  // gap
  CHECK_FALSE(is_linked(seg(0, 1), Segment(Rat(3, 2), Rat(5, 2))));  // cosets differ
}

TEST_CASE("one elementary operation on a linked pair") {
  SECTION("two points fuse") {
    std::vector<Multisegment> moves = elementary_moves(ms({seg(0, 0), seg(1, 1)}));
    REQUIRE(moves.size() == 1);
    CHECK(moves[0] == ms({seg(0, 1)}));
  }
  SECTION("overlap produces union plus intersection") {
    std::vector<Multisegment> moves = elementary_moves(ms({seg(0, 1), seg(1, 2)}));
    REQUIRE(moves.size() == 1);
    CHECK(moves[0] == ms({seg(0, 2), seg(1, 1)}));
  }
  SECTION("maximal multisegment admits no move") {
    CHECK(elementary_moves(ms({seg(0, 2), seg(1, 1)})).empty());
  }
  SECTION("duplicate pairs yield one result") {
    std::vector<Multisegment> moves =
        elementary_moves(ms({seg(0, 1), seg(0, 1), seg(1, 2), seg(1, 2)}));
    std::set<Multisegment> dedup(moves.begin(), moves.end());
    CHECK(moves.size() == dedup.size());
  }
}

TEST_CASE("a move climbs the closure order") {
  Multisegment m = ms({seg(-1, 3), seg(-1, -1), seg(1, 2), seg(0, 1), seg(0, 1)});
  Multisegment n = ms({seg(-1, 3), seg(-1, -1), seg(0, 2), seg(0, 1), seg(1, 1)});
  std::vector<Multisegment> moves = elementary_moves(m);
  CHECK(std::find(moves.begin(), moves.end(), n) != moves.end());
  CHECK(closure_leq(m, n));
  CHECK_FALSE(closure_leq(n, m));
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  for (long mass = 1; mass <= 6; ++mass)
    for (const WeightFunction& phi : line_weights(mass)) {
      std::vector<Multisegment> got = enumerate_multisegments(phi);
      std::set<Multisegment> want = oracles::brute_multisegments(phi);
      REQUIRE(got.size() == want.size());
      for (const Multisegment& m : got) {
        CHECK(want.count(m) == 1);
        CHECK(weight_of(m) == phi);
      }
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("enumeration crosses piece boundaries by products") {
  WeightFunction phi;
  phi.v[Rat(0)] = 1;
  phi.v[Rat(1)] = 1;
  phi.v[Rat(3)] = 1;  // gap at 2 splits the support
  std::vector<Multisegment> got = enumerate_multisegments(phi);
  CHECK(got.size() == 2);  // { [0,1]+[3], [0]+[1]+[3] }
  std::set<Multisegment> want = oracles::brute_multisegments(phi);
  CHECK(std::set<Multisegment>(got.begin(), got.end()) == want);
}

TEST_CASE("half-integral lines behave like shifted integral ones") {
  WeightFunction phi;
  phi.v[Rat(1, 2)] = 1;
  phi.v[Rat(3, 2)] = 2;
  phi.v[Rat(5, 2)] = 1;
  CHECK(enumerate_multisegments(phi).size() == 5);
}

TEST_CASE("five multisegments of the hook weight") {
  // Support 0,1,2 with a double point at 1.
  std::vector<Multisegment> all = enumerate_multisegments(wf({{0, 1}, {1, 2}, {2, 1}}));
  CHECK(all.size() == 5);
}

TEST_CASE("rank profile counts containing segments") {
  std::map<Segment, long, SegLess> r = rank_profile(ms({seg(0, 2), seg(1, 1)}));
  CHECK(r.at(seg(0, 2)) == 1);
  CHECK(r.at(seg(1, 1)) == 2);
  CHECK(r.at(seg(0, 1)) == 1);
  CHECK(r.at(seg(1, 2)) == 1);
  CHECK(r.at(seg(0, 0)) == 1);
}

TEST_CASE("closure order equals rank dominance") {
  for (long mass = 2; mass <= 6; ++mass)
    for (const WeightFunction& phi : line_weights(mass)) {
      std::vector<Multisegment> all = enumerate_multisegments(phi);
      for (const Multisegment& m : all)
        for (const Multisegment& n : all) {
          bool viaMoves = closure_leq_bfs(m, n);
          bool viaRanks = rank_dominated(m, n);
          INFO(m.str() << " vs " << n.str());
          CHECK(viaMoves == viaRanks);
        }
    }
}

TEST_CASE("closure compares nothing across different weights") {
  CHECK_FALSE(closure_leq(ms({seg(0, 1)}), ms({seg(0, 2)})));
  CHECK_FALSE(closure_leq(ms({seg(0, 0)}), ms({seg(1, 1)})));
}

TEST_CASE("dualize reflects segments and weights") {
  Multisegment m = ms({seg(0, 2), seg(1, 1)});
  CHECK(dualize(m) == ms({seg(-2, 0), seg(-1, -1)}));
  CHECK(dualize(dualize(m)) == m);
  WeightFunction phi = wf({{0, 1}, {1, 2}, {2, 1}});
  CHECK(dualize(dualize(phi)) == phi);
  CHECK(dualize(phi)(Rat(-1)) == 2);
  // Reflection exchanges the two kinds of linkage data but preserves the
  // closure order.
  Multisegment a = ms({seg(0, 1), seg(1, 2)});
  Multisegment b = ms({seg(0, 2), seg(1, 1)});
  CHECK(closure_leq(a, b) == closure_leq(dualize(a), dualize(b)));
}

TEST_CASE("integral pieces split at gaps and coset jumps") {
  WeightFunction phi;
  phi.v[Rat(0)] = 1;
  phi.v[Rat(1)] = 1;
  phi.v[Rat(5, 2)] = 1;
  phi.v[Rat(7, 2)] = 2;
  std::vector<WeightPiece> pieces = integral_pieces(phi);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].lo == Rat(0));
  CHECK(pieces[0].hi == Rat(1));
  CHECK(pieces[1].lo == Rat(5, 2));
  CHECK(pieces[1].hi == Rat(7, 2));
  CHECK(pieces[0].phi.mass() + pieces[1].phi.mass() == phi.mass());
}

TEST_CASE("unimodality center exists exactly for plateaued weights") {
  SECTION("single point never qualifies") {
    CHECK_FALSE(assumption_r(wf({{0, 1}})).has_value());
    CHECK_FALSE(assumption_r(wf({{0, 3}})).has_value());
  }
  SECTION("two equal points give the smallest interior center") {
    auto data = assumption_r(wf({{0, 1}, {1, 1}}));
    REQUIRE(data.has_value());
    REQUIRE(data->size() == 1);
    CHECK((*data)[0].r == Rat(1, 2));
    CHECK((*data)[0].n == 1);
  }
  SECTION("strict peak fails") {
    CHECK_FALSE(assumption_r(wf({{0, 1}, {1, 2}, {2, 1}})).has_value());
  }
  SECTION("interior plateau pins the center") {
    auto data = assumption_r(wf({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
    REQUIRE(data.has_value());
    CHECK((*data)[0].r == Rat(3, 2));
    CHECK((*data)[0].n == 2);
  }
  SECTION("long constant run centers at the first interior point") {
    auto data = assumption_r(wf({{0, 2}, {1, 2}, {2, 2}}));
    REQUIRE(data.has_value());
    CHECK((*data)[0].r == Rat(1, 2));
    CHECK((*data)[0].n == 2);
  }
  SECTION("every piece must qualify") {
    WeightFunction phi;
    phi.v[Rat(0)] = 1;
    phi.v[Rat(1)] = 1;
    phi.v[Rat(10)] = 1;  // second piece is a single point
    CHECK_FALSE(assumption_r(phi).has_value());
  }
  SECTION("per-piece data for a two-piece weight") {
    WeightFunction phi;
    phi.v[Rat(0)] = 1;
    phi.v[Rat(1)] = 1;
    phi.v[Rat(9, 2)] = 2;
    phi.v[Rat(11, 2)] = 2;
    auto data = assumption_r(phi);
    REQUIRE(data.has_value());
    REQUIRE(data->size() == 2);
    CHECK((*data)[0].r == Rat(1, 2));
    CHECK((*data)[1].r == Rat(5));
    CHECK((*data)[1].n == 2);
  }
}

TEST_CASE("disjoint union adds weights") {
  Multisegment m = ms({seg(0, 1)});
  Multisegment n = ms({seg(1, 2), seg(0, 0)});
  Multisegment u = disjoint_union(m, n);
  CHECK(u.mass() == m.mass() + n.mass());
  CHECK(weight_of(u)(Rat(1)) == 2);
}
