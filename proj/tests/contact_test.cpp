#include "finduality/contact.hpp"

#include "doctest.h"
#include "finduality/stdcontact.hpp"

using namespace finduality;

TEST_CASE("rho_s and rho_l bound every contact relation") {
  FinBoolAlg b3(3);
  ContactRelation s = rho_s(b3), l = rho_l(b3);
  ContactAxioms as = check_axioms(b3, s.table());
  CHECK(as.is_nca);
  ContactAxioms al = check_axioms(b3, l.table());
  CHECK(al.is_ca);
  for (const auto& kernel : all_kernels(b3)) {
    ContactRelation c = kernel_to_contact(b3, kernel);
    for (Elem a = 0; a < b3.size(); ++a) {
      for (Elem b = 0; b < b3.size(); ++b) {
        if (s.contact(a, b)) CHECK(c.contact(a, b));
        if (c.contact(a, b)) CHECK(l.contact(a, b));
      }
    }
  }
  CHECK_THROWS_AS(rho_s(FinBoolAlg(0)), DegenerateAlgebra);
}

TEST_CASE("every kernel relation is a CA; only rho_s is normal") {
  for (int n = 1; n <= 3; ++n) {
    FinBoolAlg b(n);
    int nca_count = 0;
    for (const auto& kernel : all_kernels(b)) {
      ContactRelation c = kernel_to_contact(b, kernel);
      ContactAxioms ax = check_axioms(b, c.table());
      CHECK(ax.is_ca);
      CHECK(ax.ll_roundtrip);
      // (ll1)-(ll4), (ll7) hold in any CA
      CHECK(ax.ll1);
      CHECK(ax.ll2);
      CHECK(ax.ll3);
      CHECK(ax.ll4);
      CHECK(ax.ll7);
      CHECK((ax.ll5 && ax.ll6) == ax.is_nca);
      if (ax.is_nca) {
        ++nca_count;
        CHECK(c == rho_s(b));
      }
    }
    CHECK(nca_count == 1);
  }
}

TEST_CASE("kernel round trip and validation") {
  FinBoolAlg b3(3);
  std::vector<std::uint32_t> kernel = {0b011, 0b011, 0b100};  // atoms 0,1 touch
  ContactRelation c = kernel_to_contact(b3, kernel);
  CHECK(contact_to_kernel(b3, c.table()) == kernel);
  CHECK_THROWS_AS(kernel_to_contact(b3, {0b010, 0b011, 0b100}), NotReflexive);
  CHECK_THROWS_AS(kernel_to_contact(b3, {0b011, 0b010, 0b100}), NotSymmetric);
  CHECK(c.ll(b3.atom(2), b3.atom(2)));
  CHECK_FALSE(c.ll(b3.atom(0), b3.atom(0)));  // atom 1 touches it from outside
}

TEST_CASE("ultrafilter relation mirrors the kernel") {
  FinBoolAlg b3(3);
  ContactRelation s = rho_s(b3);
  UltrafilterRelation rs = r_relation(s);
  CHECK(rs.is_equivalence());
  for (int i = 0; i < 3; ++i) CHECK(rs.rows[i] == (1u << i));

  UltrafilterRelation rl = r_relation(rho_l(b3));
  CHECK(rl.is_equivalence());
  for (int i = 0; i < 3; ++i) CHECK(rl.rows[i] == 0b111);

  // a chain kernel 0-1, 1-2 gives a non-transitive relation
  ContactRelation chain = kernel_to_contact(b3, {0b011, 0b111, 0b110});
  UltrafilterRelation rc = r_relation(chain);
  CHECK(rc.reflexive);
  CHECK(rc.symmetric);
  CHECK_FALSE(rc.transitive);
}

TEST_CASE("contact holds exactly when an ultrafilter pair witnesses it") {
  FinBoolAlg b3(3);
  for (const auto& kernel : all_kernels(b3)) {
    ContactRelation c = kernel_to_contact(b3, kernel);
    for (Elem a = 0; a < b3.size(); ++a) {
      for (Elem b = 0; b < b3.size(); ++b) {
        auto w = witness_contact(c, a, b);
        CHECK(w.has_value() == c.contact(a, b));
        if (w) {
          CHECK((w->first.carrier & (ElemSet{1} << a)) != 0);
          CHECK((w->second.carrier & (ElemSet{1} << b)) != 0);
        }
      }
    }
  }
}

TEST_CASE("cluster counts for the extremal relations") {
  for (int n = 1; n <= 4; ++n) {
    FinBoolAlg b(n);
    CHECK(clusters(rho_s(b)).size() == static_cast<std::size_t>(n));
    CHECK(clusters(rho_l(b)).size() == 1);
  }
}

TEST_CASE("sigma_u is the unique cluster containing u in an NCA") {
  FinBoolAlg b3(3);
  ContactRelation s = rho_s(b3);
  auto cls = clusters(s);
  for (const Ultrafilter& u : ultrafilters(b3)) {
    SigmaU su = sigma_u(s, u);
    CHECK(su.in_theorem_scope);
    CHECK(su.is_cluster);
    int containing = 0;
    for (Cluster c : cls) {
      if ((u.carrier & ~c) == 0) {
        ++containing;
        CHECK(c == su.carrier);
      }
    }
    CHECK(containing == 1);
  }
}

TEST_CASE("clusters are never nested") {
  FinBoolAlg b3(3);
  for (const auto& kernel : all_kernels(b3)) {
    ContactRelation c = kernel_to_contact(b3, kernel);
    auto cls = clusters(c);
    for (Cluster c1 : cls) {
      for (Cluster c2 : cls) {
        if (c1 != c2) CHECK((c1 & ~c2) != 0);
      }
    }
  }
}

TEST_CASE("standard contact of the pinch space") {
  StandardContact sc = standard_contact(pinch_space());
  CHECK(sc.rc.algebra.n_atoms() == 2);
  Elem ab = sc.rc.element_of(0b011), bc = sc.rc.element_of(0b110);
  CHECK(sc.relation.contact(ab, bc));  // they share the pinch point b
  CHECK(sc.rc.algebra.meet(ab, bc) == sc.rc.algebra.zero());
  ContactAxioms ax = check_axioms(sc.rc.algebra, sc.relation.table());
  CHECK(ax.is_ca);
  CHECK_FALSE(ax.is_nca);  // ab C bc but ab /\ bc = 0, so not rho_s

  // point clusters: sigma_b contains both atoms
  Cluster sb = point_cluster(sc.rc, 1);
  CHECK(is_cluster(sc.relation, sb));
  CHECK((sb & (ElemSet{1} << ab)) != 0);
  CHECK((sb & (ElemSet{1} << bc)) != 0);
  // the pinch space is not regular, and indeed sigma_a fails CL3: bc meets
  // every regular closed set containing a without containing a itself
  Cluster sa = point_cluster(sc.rc, 0);
  CHECK_FALSE(is_cluster(sc.relation, sa));
  CHECK(sa != sb);
}

TEST_CASE("point clusters of a regular space are clusters") {
  FinTopSpace x = discrete_space(3);
  REQUIRE(x.is_regular());
  StandardContact sc = standard_contact(x);
  for (int p = 0; p < x.n_points(); ++p) {
    CHECK(is_cluster(sc.relation, point_cluster(sc.rc, p)));
  }
}

TEST_CASE("standard contact of a discrete space is rho_s") {
  StandardContact sc = standard_contact(discrete_space(3));
  CHECK(sc.relation == rho_s(sc.rc.algebra));
  CHECK(check_axioms(sc.rc.algebra, sc.relation.table()).is_nca);
}
