#include "finduality/extension.hpp"

#include "doctest.h"
#include "finduality/covering.hpp"

using namespace finduality;

namespace {

bool check_named(const std::vector<NamedCheck>& checks, bool expect_all,
                 std::string* first_failure = nullptr) {
  bool all = true;
  for (const NamedCheck& c : checks) {
    if (!c.ok) {
      all = false;
      if (first_failure && first_failure->empty()) {
        *first_failure = c.name + ": " + c.detail;
      }
    }
  }
  return all == expect_all;
}

}  // namespace

TEST_CASE("covering flags for the first synthetic fixture") {
  Fixture fx = builtin_fixture("syncat1");
  FullSubcat sub = full_subcategory(fx.host, fx.sub_objects);
  CoveringReport rep = check_covering_class(fx.host, sub, fx.covering);
  CHECK(rep.p1);
  CHECK(rep.p2);
  CHECK(rep.p2_prime);
  CHECK(rep.p3);
  CHECK(rep.p4);
  CHECK(rep.p4_prime);
  CHECK(rep.p4_star);
  CHECK(rep.p5);
  CHECK(rep.p5_star);
  CHECK(rep.is_covering());
  CHECK(rep.is_rigid());
  REQUIRE(rep.hats.has_value());
  // the only hat candidates live in hom(B1, B1) = {id}
  int p0 = fx.host.morphism_index("p0");
  int e = fx.host.morphism_index("e");
  CHECK(rep.hats->at(p0, e, p0) == fx.host.morphism_index("id_B1"));
}

TEST_CASE("the second synthetic fixture fails P5 with the expected square") {
  Fixture fx = builtin_fixture("syncat2");
  FullSubcat sub = full_subcategory(fx.host, fx.sub_objects);
  CoveringReport rep = check_covering_class(fx.host, sub, fx.covering);
  CHECK(rep.p1);
  CHECK(rep.p2);
  CHECK(rep.p3);
  CHECK(rep.p4);
  CHECK_FALSE(rep.p5);
  CHECK_FALSE(rep.is_covering());
  CHECK(rep.witness == "P5: no fill-in for (e, p0, p0)");
  CHECK_THROWS_AS(extension_from_fixture(fx), LawViolation);
}

TEST_CASE("E and pi derived from the covers") {
  Fixture fx = builtin_fixture("syncat1");
  FullSubcat sub = full_subcategory(fx.host, fx.sub_objects);
  CoveringReport rep = check_covering_class(fx.host, sub, fx.covering);
  EPiData ep = derive_E_pi(fx.host, sub, rep);
  CHECK(ep.e_ok);
  CHECK(ep.pi_natural);
  CHECK(ep.pi_iso_on_b);
  CHECK(ep.pi_identity_on_b);
  CHECK(ep.ei_identity);
  // E collapses C0 onto B1 and sends e to id_B1
  int c0 = fx.host.object_index("C0");
  CHECK(sub.obj_to_host[ep.e.obj_map[c0]] == fx.host.object_index("B1"));

  // P_pi reproduces the covering class
  std::vector<int> back = derive_P_from_pi(fx.host, sub, rep.pi);
  std::vector<int> orig = fx.covering;
  std::sort(orig.begin(), orig.end());
  CHECK(back == orig);

  SemiAdjointReport sa = check_semi_adjoint(fx.host, sub, ep);
  CHECK(sa.failure.empty());
  CHECK(sa.triangular);
  CHECK(sa.fully);
  // e : C0 -> C0 breaks IE(pi) = pi(IE)? here E(e) = id, so check the flag
  // simply reflects the computed comparison
  bool lhs_eq = true;
  for (int c = 0; c < fx.host.n_objects(); ++c) {
    int ie_pi = sub.mor_to_host[ep.e.mor_map[ep.pi.components[c]]];
    int pi_ie = ep.pi.components[sub.obj_to_host[ep.e.obj_map[c]]];
    if (ie_pi != pi_ie) lhs_eq = false;
  }
  CHECK(sa.left_adjoint == lhs_eq);
}

TEST_CASE("extension over the first synthetic fixture") {
  Fixture fx = builtin_fixture("syncat1");
  ExtensionPack pk = extension_from_fixture(fx);
  CHECK(pk.d_objects.size() == 2);
  int a1 = 0;  // the formal dual has a single object
  int p0 = fx.host.morphism_index("p0");
  int dp0 = pk.d_object_index(a1, p0);
  REQUIRE(dp0 >= 0);
  CHECK(pk.d.hom(dp0, dp0).size() == 2);  // lifted id and e
  std::string why;
  CHECK(check_named(verify_extension(pk), true, &why));
  CHECK(why.empty());
}

TEST_CASE("extension over the concrete spaces fixture") {
  Fixture fx = builtin_fixture("topcat");
  ExtensionPack pk = extension_from_fixture(fx);
  // one D-object per bijective cover
  CHECK(pk.d_objects.size() == fx.covering.size());
  std::string why;
  CHECK(check_named(verify_extension(pk), true, &why));
  CHECK(why.empty());
  // with pi = identities, E is (isomorphic to) the identity functor
  for (int c = 0; c < fx.host.n_objects(); ++c) {
    CHECK(pk.sub.obj_to_host[pk.epi.e.obj_map[c]] == c);
  }
  FullSubcat sub = full_subcategory(fx.host, fx.sub_objects);
  SemiAdjointReport sa = check_semi_adjoint(fx.host, sub, pk.epi);
  CHECK(sa.triangular);
  CHECK(sa.fully);
  CHECK(sa.left_adjoint);  // B = C here, so the inclusion is an equivalence
}

TEST_CASE("rigidity gate") {
  // host with a nontrivial automorphism over the cover's domain:
  // B-objects {B}, morphism s : B -> B with s.s = id, cover q : B -> C
  // with q.s = q. Then pi_C = q is not rigid.
  CategoryBuilder builder("wobble");
  int bo = builder.add_object("B");
  int co = builder.add_object("C");
  int s = builder.add_morphism("s", bo, bo);
  int q = builder.add_morphism("q", bo, co);
  builder.set_compose(s, s, 0);  // id_B is morphism 0
  builder.set_compose(q, s, q);
  FinCategory host = builder.build();
  Fixture fx;
  fx.name = "wobble";
  fx.host = host;
  fx.sub_objects = {bo};
  fx.covering = {host.id_of[bo], s, q};  // s included to keep P3 closure
  FullSubcat sub = full_subcategory(host, fx.sub_objects);
  CoveringReport rep = check_covering_class(host, sub, fx.covering);
  CHECK(rep.p4);
  CHECK_FALSE(rep.p4_star);
  if (rep.is_covering()) {
    CHECK_THROWS_AS(extension_from_fixture(fx), RigidityRequired);
  }
}
