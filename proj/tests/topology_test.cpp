#include "finduality/topology.hpp"

#include <algorithm>

#include "doctest.h"

using namespace finduality;

TEST_CASE("constructor rejects non-topologies") {
  CHECK_THROWS_AS(FinTopSpace(2, {0b00, 0b01, 0b10}), NotATopology);  // no X
  CHECK_THROWS_AS(FinTopSpace(2, {0b01, 0b11}), NotATopology);       // no empty
  // closed under union/intersection fails
  CHECK_THROWS_AS(FinTopSpace(3, {0b000, 0b001, 0b010, 0b111}), NotATopology);
  CHECK_NOTHROW(FinTopSpace(0, {0}));
}

TEST_CASE("closure and interior on the pinch space") {
  FinTopSpace x = pinch_space();
  CHECK(x.closure(0b001) == 0b011);   // cl{a} = {a,b}
  CHECK(x.closure(0b100) == 0b110);   // cl{c} = {b,c}
  CHECK(x.closure(0b010) == 0b010);   // {b} closed
  CHECK(x.interior(0b011) == 0b001);  // int{a,b} = {a}
  CHECK(x.interior(0b010) == 0);
  CHECK(x.is_regular() == false);
}

TEST_CASE("labeled topology counts") {
  CHECK(enumerate_topologies(0).size() == 1);
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);
  CHECK_THROWS_AS(enumerate_topologies(5), BoundExceeded);
}

TEST_CASE("sampled five-point families are topologies") {
  auto sample = enumerate_topologies(5, 40, 7);
  CHECK(!sample.empty());
  CHECK(sample.size() <= 40);
  for (const FinTopSpace& x : sample) {
    CHECK(x.n_points() == 5);  // construction already validated the axioms
  }
}

TEST_CASE("homeomorphism classes on two and three points") {
  auto reps2 = up_to_homeomorphism(enumerate_topologies(2));
  CHECK(reps2.size() == 3);
  auto reps3 = up_to_homeomorphism(enumerate_topologies(3));
  CHECK(reps3.size() == 9);
  CHECK(homeomorphic(sierpinski_space(),
                     FinTopSpace(2, {0b00, 0b01, 0b11})));
  CHECK_FALSE(homeomorphic(sierpinski_space(), discrete_space(2)));
}

TEST_CASE("RC of the pinch space is the four-element algebra") {
  RCAlgebra rc = rc_algebra(pinch_space());
  CHECK(rc.algebra.n_atoms() == 2);
  std::vector<PointSet> sets = rc.rc_sets;
  std::sort(sets.begin(), sets.end());
  CHECK(sets == std::vector<PointSet>{0b000, 0b011, 0b110, 0b111});
  // join is union, meet is cl(int(intersection))
  Elem ab = rc.element_of(0b011), bc = rc.element_of(0b110);
  CHECK(rc.set_of(rc.algebra.join(ab, bc)) == 0b111);
  CHECK(rc.set_of(rc.algebra.meet(ab, bc)) == 0b000);  // {b} has empty interior
  CHECK(rc.set_of(rc.algebra.complement(ab)) == 0b110);
  CHECK_THROWS_AS(rc.element_of(0b010), ShapeMismatch);
}

TEST_CASE("RC of a discrete space is the power set") {
  RCAlgebra rc = rc_algebra(discrete_space(3));
  CHECK(rc.algebra.n_atoms() == 3);
  for (Elem a = 0; a < rc.algebra.size(); ++a) {
    CHECK(rc.set_of(a) == static_cast<PointSet>(a));
  }
}

TEST_CASE("map predicate flags on simple maps") {
  FinTopSpace s = sierpinski_space();
  ContMap id = ContMap::identity(s);
  MapFlags f = map_predicates(id);
  CHECK(f.continuous);
  CHECK(f.open_map);
  CHECK(f.closed_map);
  CHECK(f.quasi_open);
  CHECK(f.skeletal);
  CHECK(f.irreducible);
  CHECK(f.satisfies_skehj);
  CHECK(f.perfect);

  // collapse the discrete pair to a point: closed and open but reducible
  ContMap collapse{discrete_space(2), discrete_space(1), {0, 0}};
  MapFlags g = map_predicates(collapse);
  CHECK(g.continuous);
  CHECK(g.closed_map);
  CHECK_FALSE(g.irreducible);
  CHECK(g.quasi_open);

  // the non-surjective inclusion at Sierpinski's closed point
  ContMap incl{discrete_space(1), s, {0}};
  MapFlags h = map_predicates(incl);
  CHECK(h.continuous);
  CHECK_FALSE(h.irreducible);
  CHECK_FALSE(h.open_map);
}

TEST_CASE("continuity is exactly preimage-openness") {
  FinTopSpace s = sierpinski_space();
  CHECK(is_continuous(ContMap{s, s, {1, 1}}));       // constant at the closed point
  CHECK_FALSE(is_continuous(ContMap{s, s, {1, 0}}));  // swaps open and closed
  CHECK(all_continuous_maps(s, s).size() == 3);
  CHECK(all_continuous_maps(discrete_space(2), s).size() == 4);
}

TEST_CASE("phi_p on a closed irreducible map") {
  // chain space a < b < c onto Sierpinski: a to the open point, {b,c} to
  // the closed one
  FinTopSpace chain(3, {0b000, 0b001, 0b011, 0b111});
  ContMap p{chain, sierpinski_space(), {1, 0, 0}};
  MapFlags f = map_predicates(p);
  REQUIRE(f.continuous);
  REQUIRE(f.closed_map);
  REQUIRE(f.irreducible);
  RCIso iso = phi_p(p);
  CHECK(iso.source_rc.algebra.n_atoms() == iso.target_rc.algebra.n_atoms());
  for (Elem a = 0; a < iso.source_rc.algebra.size(); ++a) {
    CHECK(iso.inverse[iso.forward[a]] == a);
  }
  // reducible maps are rejected
  ContMap collapse{discrete_space(2), discrete_space(1), {0, 0}};
  CHECK_THROWS_AS(phi_p(collapse), PreconditionFailed);
}

TEST_CASE("f_sharp picks the points whose whole fibre fits") {
  ContMap collapse{discrete_space(2), discrete_space(1), {0, 0}};
  CHECK(f_sharp(collapse, 0b01) == 0);  // one point of the fibre is missing
  CHECK(f_sharp(collapse, 0b11) == 0b1);
  FinTopSpace s = sierpinski_space();
  CHECK_THROWS_AS(f_sharp(ContMap::identity(s), 0b01), NotOpen);
}

TEST_CASE("quotients carry the finest compatible topology") {
  FinTopSpace x = pinch_space();
  // identify a and c
  std::vector<PointSet> rel = {0b101, 0b010, 0b101};
  Quotient q = quotient_space(x, rel);
  CHECK(q.space.n_points() == 2);
  CHECK(is_quotient_map(q.map));
  CHECK(is_continuous(q.map));
  // the class of b is closed and not open
  PointSet b_class = PointSet{1} << q.class_of[1];
  CHECK(q.space.is_closed(b_class));
  CHECK_FALSE(q.space.is_open(b_class));

  CHECK_THROWS_AS(quotient_space(x, std::vector<PointSet>{0b001, 0b011, 0b100}),
                  NotEquivalence);
  CHECK(relation_from_classes(3, {0, 1, 0}) ==
        std::vector<PointSet>{0b101, 0b010, 0b101});
}
