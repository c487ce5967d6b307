#include "finduality/extension.hpp"

#include <algorithm>
#include <set>

namespace finduality {

DualityData formal_dual(const FinCategory& b) {
  DualityData out;
  out.a = opposite(b);
  out.a.name = b.name + "^d";
  out.t.name = "T";
  out.t.contravariant = true;
  out.t.obj_map.resize(b.n_objects());
  out.t.mor_map.resize(b.n_morphisms());
  for (int i = 0; i < b.n_objects(); ++i) out.t.obj_map[i] = i;
  for (int i = 0; i < b.n_morphisms(); ++i) out.t.mor_map[i] = i;
  out.s = out.t;
  out.s.name = "S";
  out.eta.name = "eta";
  out.eta.components = b.id_of;
  out.eps.name = "eps";
  out.eps.components = out.a.id_of;
  return out;
}

int ExtensionPack::d_object_index(int a_obj, int p) const {
  for (std::size_t i = 0; i < d_objects.size(); ++i) {
    if (d_objects[i].a_obj == a_obj && d_objects[i].p == p) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

int ExtensionPack::d_morphism_index(int src, int dst, int phi, int f) const {
  for (int m = 0; m < d.n_morphisms(); ++m) {
    if (d.dom(m) == src && d.cod(m) == dst && d_morphisms[m].phi == phi &&
        d_morphisms[m].f == f) {
      return m;
    }
  }
  return -1;
}

ExtensionPack build_extension(const FinCategory& host, const FullSubcat& sub,
                              const std::vector<int>& covering,
                              const DualityData& dual,
                              const std::optional<std::vector<int>>& chosen_pi) {
  ExtensionPack pk;
  pk.host = host;
  pk.sub = sub;
  pk.covering = covering;
  pk.dual = dual;
  pk.cov = check_covering_class(host, sub, covering, chosen_pi);
  if (!pk.cov.is_covering()) {
    throw LawViolation("not a covering class: " + pk.cov.witness);
  }
  if (!pk.cov.p4_star) {
    throw RigidityRequired("the extension construction needs rigid covers: " +
                           pk.cov.witness);
  }
  pk.epi = derive_E_pi(host, sub, pk.cov);
  const HatTable& hats = *pk.cov.hats;

  // embedded T : A -> host objects/morphisms
  auto t_obj_host = [&](int a_obj) {
    return sub.obj_to_host[dual.t.obj_map[a_obj]];
  };
  auto t_mor_host = [&](int phi) {
    return sub.mor_to_host[dual.t.mor_map[phi]];
  };

  // Objects of D: (A, p) with p in P starting at TA.
  std::set<int> pset(covering.begin(), covering.end());
  for (int a_obj = 0; a_obj < dual.a.n_objects(); ++a_obj) {
    for (int p : pset) {
      if (host.dom(p) == t_obj_host(a_obj)) {
        pk.d_objects.push_back({a_obj, p});
      }
    }
  }
  pk.d.name = "D(" + host.name + ")";
  for (const CategoryD& ob : pk.d_objects) {
    pk.d.objects.push_back("(" + dual.a.objects[ob.a_obj] + "," +
                           host.morphisms[ob.p].name + ")");
  }

  // Morphisms (phi, f) : (A, p) -> (A', p') with T(phi) the chosen hat of f.
  for (std::size_t i = 0; i < pk.d_objects.size(); ++i) {
    for (std::size_t k = 0; k < pk.d_objects.size(); ++k) {
      const CategoryD& x = pk.d_objects[i];
      const CategoryD& y = pk.d_objects[k];
      for (int f : host.hom(host.cod(y.p), host.cod(x.p))) {
        int hat = hats.at(y.p, f, x.p);  // T(A') -> T(A) in the host
        int phi = -1;
        for (int cand : dual.a.hom(x.a_obj, y.a_obj)) {
          if (t_mor_host(cand) == hat) {
            if (phi != -1) {
              throw InternalContradiction("T is not faithful on the fixture");
            }
            phi = cand;
          }
        }
        if (phi < 0) continue;
        pk.d.morphisms.push_back(
            {"(" + dual.a.morphisms[phi].name + "," + host.morphisms[f].name +
                 ")",
             static_cast<int>(i), static_cast<int>(k)});
        pk.d_morphisms.push_back({phi, f});
      }
    }
  }

  const int dn = pk.d.n_morphisms();
  pk.d.comp.assign(dn, std::vector<int>(dn, -1));
  for (int g = 0; g < dn; ++g) {
    for (int f = 0; f < dn; ++f) {
      if (pk.d.cod(f) != pk.d.dom(g)) continue;
      int phi = dual.a.comp[pk.d_morphisms[g].phi][pk.d_morphisms[f].phi];
      int ff = host.comp[pk.d_morphisms[f].f][pk.d_morphisms[g].f];
      int gf = pk.d_morphism_index(pk.d.dom(f), pk.d.cod(g), phi, ff);
      if (gf < 0) {
        throw InternalContradiction("D is not closed under composition");
      }
      pk.d.comp[g][f] = gf;
    }
  }
  pk.d.id_of.resize(pk.d_objects.size());
  for (std::size_t i = 0; i < pk.d_objects.size(); ++i) {
    int idx = pk.d_morphism_index(static_cast<int>(i), static_cast<int>(i),
                                  dual.a.id_of[pk.d_objects[i].a_obj],
                                  host.id_of[host.cod(pk.d_objects[i].p)]);
    if (idx < 0) throw InternalContradiction("D misses an identity");
    pk.d.id_of[i] = idx;
  }

  // T~ : D -> host (contravariant projection onto the f-part).
  pk.t_tilde.name = "T~";
  pk.t_tilde.contravariant = true;
  for (const CategoryD& ob : pk.d_objects) {
    pk.t_tilde.obj_map.push_back(host.cod(ob.p));
  }
  for (const DMorData& m : pk.d_morphisms) pk.t_tilde.mor_map.push_back(m.f);

  // F : D -> A (projection onto the phi-part).
  pk.f_proj.name = "F";
  for (const CategoryD& ob : pk.d_objects) pk.f_proj.obj_map.push_back(ob.a_obj);
  for (const DMorData& m : pk.d_morphisms) pk.f_proj.mor_map.push_back(m.phi);

  // J : A -> D, A |-> (A, 1_TA).
  pk.j.name = "J";
  for (int a_obj = 0; a_obj < dual.a.n_objects(); ++a_obj) {
    int idx = pk.d_object_index(a_obj, host.id_of[t_obj_host(a_obj)]);
    if (idx < 0) throw InternalContradiction("J image object missing");
    pk.j.obj_map.push_back(idx);
  }
  for (int phi = 0; phi < dual.a.n_morphisms(); ++phi) {
    int src = pk.j.obj_map[dual.a.dom(phi)];
    int dst = pk.j.obj_map[dual.a.cod(phi)];
    int idx = pk.d_morphism_index(src, dst, phi, t_mor_host(phi));
    if (idx < 0) throw InternalContradiction("J image morphism missing");
    pk.j.mor_map.push_back(idx);
  }

  // S~ : host -> D, C |-> (SEC, pi_C . eta_{EC}^{-1}).
  auto stilde_p = [&](int c) {
    int ec = pk.epi.e.obj_map[c];  // sub object
    int eta_ec = dual.eta.components[ec];
    auto inv = sub.cat.inverse(eta_ec);
    if (!inv) throw LawViolation("eta is not an isomorphism");
    return host.comp[pk.cov.pi[c]][sub.mor_to_host[*inv]];
  };
  pk.s_tilde.name = "S~";
  pk.s_tilde.contravariant = true;
  for (int c = 0; c < host.n_objects(); ++c) {
    int p = stilde_p(c);
    if (!pset.count(p)) {
      throw LawViolation("pi_C . eta^{-1} escapes the covering class at " +
                         host.objects[c]);
    }
    int idx = pk.d_object_index(dual.s.obj_map[pk.epi.e.obj_map[c]], p);
    if (idx < 0) throw InternalContradiction("S~ image object missing");
    pk.s_tilde.obj_map.push_back(idx);
  }
  for (int f = 0; f < host.n_morphisms(); ++f) {
    int phi = dual.s.mor_map[pk.epi.e.mor_map[f]];
    int src = pk.s_tilde.obj_map[host.cod(f)];
    int dst = pk.s_tilde.obj_map[host.dom(f)];
    int idx = pk.d_morphism_index(src, dst, phi, f);
    if (idx < 0) throw InternalContradiction("S~ image morphism missing");
    pk.s_tilde.mor_map.push_back(idx);
  }

  // eta~ = 1: T~S~C = C.
  pk.eta_tilde.name = "eta~";
  for (int c = 0; c < host.n_objects(); ++c) {
    if (pk.t_tilde.obj_map[pk.s_tilde.obj_map[c]] != c) {
      throw InternalContradiction("T~S~ is not the identity on objects");
    }
    pk.eta_tilde.components.push_back(host.id_of[c]);
  }

  // beta_(A,p) = the chosen hat of 1_C from p to pi_C, as a B-morphism.
  pk.beta.name = "beta";
  for (const CategoryD& ob : pk.d_objects) {
    int c = host.cod(ob.p);
    int hat = hats.at(ob.p, host.id_of[c], pk.cov.pi[c]);
    int m = sub.host_mor_to_sub[hat];
    if (m < 0 || !sub.cat.is_iso(m)) {
      throw InternalContradiction("beta component is not a B-isomorphism");
    }
    pk.beta.components.push_back(m);
  }

  // eps~_(A,p) = (S(beta_p^{-1}) . eps_A, 1_C).
  pk.eps_tilde.name = "eps~";
  for (std::size_t i = 0; i < pk.d_objects.size(); ++i) {
    const CategoryD& ob = pk.d_objects[i];
    int c = host.cod(ob.p);
    int beta_inv = *sub.cat.inverse(pk.beta.components[i]);
    int phi = dual.a.comp[dual.s.mor_map[beta_inv]][dual.eps.components[ob.a_obj]];
    int idx = pk.d_morphism_index(static_cast<int>(i),
                                  pk.s_tilde.obj_map[c], phi, host.id_of[c]);
    if (idx < 0) throw InternalContradiction("eps~ component missing in D");
    pk.eps_tilde.components.push_back(idx);
  }

  // rho_(A,p) = (iota_p, p) : (A,p) -> (A, 1_TA).
  pk.rho.name = "rho";
  for (std::size_t i = 0; i < pk.d_objects.size(); ++i) {
    const CategoryD& ob = pk.d_objects[i];
    int ta = t_obj_host(ob.a_obj);
    int hat = hats.at(host.id_of[ta], ob.p, ob.p);
    int iota = -1;
    for (int cand : dual.a.hom(ob.a_obj, ob.a_obj)) {
      if (t_mor_host(cand) == hat) iota = cand;
    }
    if (iota < 0) throw InternalContradiction("iota_p missing");
    int midx = pk.d_morphism_index(static_cast<int>(i), pk.j.obj_map[ob.a_obj],
                                   iota, ob.p);
    if (midx < 0) throw InternalContradiction("rho component missing in D");
    pk.rho.components.push_back(midx);
  }

  // gamma_B = (S(pi_B), eta_B) : JSB -> S~B.
  pk.gamma.name = "gamma";
  for (int b = 0; b < sub.cat.n_objects(); ++b) {
    int host_obj = sub.obj_to_host[b];
    int pi_b_sub = sub.host_mor_to_sub[pk.cov.pi[host_obj]];
    if (pi_b_sub < 0) throw InternalContradiction("pi_B escapes B");
    int phi = dual.s.mor_map[pi_b_sub];
    int f = sub.mor_to_host[dual.eta.components[b]];
    int src = pk.j.obj_map[dual.s.obj_map[b]];
    int dst = pk.s_tilde.obj_map[host_obj];
    int idx = pk.d_morphism_index(src, dst, phi, f);
    if (idx < 0) throw InternalContradiction("gamma component missing in D");
    pk.gamma.components.push_back(idx);
  }
  return pk;
}

// ---------------------------------------------------------------------------

namespace {

Functor embed_functor(const FullSubcat& sub) {
  Functor i;
  i.name = "I";
  i.obj_map = sub.obj_to_host;
  i.mor_map = sub.mor_to_host;
  return i;
}

}  // namespace

std::vector<NamedCheck> verify_extension(const ExtensionPack& pk) {
  std::vector<NamedCheck> out;
  auto add = [&](const std::string& name, bool ok, std::string detail = "") {
    out.push_back({name, ok, std::move(detail)});
  };
  const FinCategory& host = pk.host;
  const FinCategory& a = pk.dual.a;
  const FinCategory& b = pk.sub.cat;
  const FinCategory& d = pk.d;

  {
    CategoryCheck ck = validate_category(d);
    add("d-category-laws", ck.ok, ck.failure);
  }

  // The input duality.
  add("t-functor", validate_functor(a, b, pk.dual.t).ok);
  add("s-functor", validate_functor(b, a, pk.dual.s).ok);
  Functor ts = compose_functors(a, pk.dual.t, pk.dual.s);  // b -> b
  Functor st = compose_functors(b, pk.dual.s, pk.dual.t);  // a -> a
  add("eta-nat-iso",
      validate_nattrans(b, b, identity_functor(b), ts, pk.dual.eta).ok &&
          is_nat_iso(b, pk.dual.eta));
  add("eps-nat-iso",
      validate_nattrans(a, a, identity_functor(a), st, pk.dual.eps).ok &&
          is_nat_iso(a, pk.dual.eps));
  {
    bool tri = true;
    for (int ao = 0; ao < a.n_objects(); ++ao) {
      int ta = pk.dual.t.obj_map[ao];
      int lhs = b.comp[pk.dual.t.mor_map[pk.dual.eps.components[ao]]]
                      [pk.dual.eta.components[ta]];
      if (lhs != b.id_of[ta]) tri = false;
    }
    for (int bo = 0; bo < b.n_objects(); ++bo) {
      int sb = pk.dual.s.obj_map[bo];
      int lhs = a.comp[pk.dual.s.mor_map[pk.dual.eta.components[bo]]]
                      [pk.dual.eps.components[sb]];
      if (lhs != a.id_of[sb]) tri = false;
    }
    add("duality-triangular", tri);
  }

  add("covering-class", pk.cov.is_covering(), pk.cov.witness);
  add("covering-rigid", pk.cov.p4_star, pk.cov.witness);

  add("e-functor", pk.epi.e_ok, pk.epi.failure);
  add("pi-natural", pk.epi.pi_natural, pk.epi.failure);
  add("pi-iso-on-b", pk.epi.pi_iso_on_b);

  // The lifted functors.
  add("t~-functor", validate_functor(d, host, pk.t_tilde).ok);
  add("s~-functor", validate_functor(host, d, pk.s_tilde).ok);
  add("j-functor", validate_functor(a, d, pk.j).ok);
  add("f-functor", validate_functor(d, a, pk.f_proj).ok);

  // J is a full embedding with retraction F.
  {
    bool faithful = true, full = true;
    for (int x = 0; x < a.n_objects(); ++x) {
      for (int y = 0; y < a.n_objects(); ++y) {
        std::set<int> images;
        for (int m : a.hom(x, y)) {
          if (!images.insert(pk.j.mor_map[m]).second) faithful = false;
        }
        for (int dm : d.hom(pk.j.obj_map[x], pk.j.obj_map[y])) {
          if (!images.count(dm)) full = false;
        }
      }
    }
    add("j-full-embedding", faithful && full);
    Functor fj = compose_functors(d, pk.f_proj, pk.j);
    add("fj-identity", functor_eq(fj, identity_functor(a)));
  }

  // (1) T~J = IT and FS~ = SE.
  {
    Functor tj = compose_functors(d, pk.t_tilde, pk.j);
    Functor it = compose_functors(b, embed_functor(pk.sub), pk.dual.t);
    add("id1-tj-eq-it", functor_eq(tj, it));
    Functor fs = compose_functors(d, pk.f_proj, pk.s_tilde);
    Functor se = compose_functors(b, pk.dual.s, pk.epi.e);
    add("id1-fs~-eq-se", functor_eq(fs, se));
  }

  // (2) T~S~ = Id, eta~ = 1, T~eps~ = 1, eps~S~ = 1.
  {
    Functor tst = compose_functors(d, pk.t_tilde, pk.s_tilde);
    add("id2-t~s~-identity", functor_eq(tst, identity_functor(host)));
    bool eta1 = pk.eta_tilde.components == host.id_of;
    add("id2-eta~-identity", eta1);
    bool teps = true;
    for (std::size_t i = 0; i < pk.d_objects.size(); ++i) {
      int c = host.cod(pk.d_objects[i].p);
      if (pk.t_tilde.mor_map[pk.eps_tilde.components[i]] != host.id_of[c]) {
        teps = false;
      }
    }
    add("id2-t~eps~-identity", teps);
    bool epss = true;
    for (int c = 0; c < host.n_objects(); ++c) {
      int sc = pk.s_tilde.obj_map[c];
      if (pk.eps_tilde.components[sc] != d.id_of[sc]) epss = false;
    }
    add("id2-eps~s~-identity", epss);
  }

  // eps~ is a natural isomorphism Id_D => S~T~ and the triangular identities
  // of the lifted duality hold.
  {
    Functor sts = compose_functors(host, pk.s_tilde, pk.t_tilde);  // d -> d
    CategoryCheck nat =
        validate_nattrans(d, d, identity_functor(d), sts, pk.eps_tilde);
    add("eps~-nat-iso", nat.ok && is_nat_iso(d, pk.eps_tilde), nat.failure);
    bool tri = true;
    for (std::size_t i = 0; i < pk.d_objects.size(); ++i) {
      int td = pk.t_tilde.obj_map[i];
      int lhs = host.comp[pk.t_tilde.mor_map[pk.eps_tilde.components[i]]]
                         [pk.eta_tilde.components[td]];
      if (lhs != host.id_of[td]) tri = false;
    }
    for (int c = 0; c < host.n_objects(); ++c) {
      int sc = pk.s_tilde.obj_map[c];
      int lhs = d.comp[pk.s_tilde.mor_map[pk.eta_tilde.components[c]]]
                      [pk.eps_tilde.components[sc]];
      if (lhs != d.id_of[sc]) tri = false;
    }
    add("lifted-triangular", tri);
  }

  // rho : Id_D => JF, with rho J = 1_J and corigidity.
  {
    Functor jf = compose_functors(a, pk.j, pk.f_proj);
    CategoryCheck nat = validate_nattrans(d, d, identity_functor(d), jf, pk.rho);
    add("rho-natural", nat.ok, nat.failure);
    bool rj = true;
    for (int ao = 0; ao < a.n_objects(); ++ao) {
      int jd = pk.j.obj_map[ao];
      if (pk.rho.components[jd] != d.id_of[jd]) rj = false;
    }
    add("rho-j-identity", rj);
    bool corigid = true;
    for (std::size_t i = 0; i < pk.d_objects.size(); ++i) {
      int jfd = pk.j.obj_map[pk.d_objects[i].a_obj];
      for (int alpha : d.hom(jfd, jfd)) {
        if (!d.is_iso(alpha)) continue;
        if (d.comp[alpha][pk.rho.components[i]] == pk.rho.components[i] &&
            alpha != d.id_of[jfd]) {
          corigid = false;
        }
      }
    }
    add("rho-corigid", corigid);
  }

  // beta : TF => ET~ natural isomorphism.
  {
    Functor tf = compose_functors(a, pk.dual.t, pk.f_proj);      // d -> b
    Functor et = compose_functors(host, pk.epi.e, pk.t_tilde);   // d -> b
    CategoryCheck nat = validate_nattrans(d, b, tf, et, pk.beta);
    add("beta-nat-iso", nat.ok && is_nat_iso(b, pk.beta), nat.failure);
  }

  // gamma : JS => S~I natural isomorphism.
  {
    Functor js = compose_functors(a, pk.j, pk.dual.s);                 // b -> d
    Functor si = compose_functors(host, pk.s_tilde, embed_functor(pk.sub));
    CategoryCheck nat = validate_nattrans(b, d, js, si, pk.gamma);
    add("gamma-nat-iso", nat.ok && is_nat_iso(d, pk.gamma), nat.failure);
  }

  // (3) pi T~ . I beta = T~ rho and gamma E . rho S~ = S~ pi.
  {
    bool first = true;
    for (std::size_t i = 0; i < pk.d_objects.size(); ++i) {
      int c = host.cod(pk.d_objects[i].p);
      int lhs = host.comp[pk.cov.pi[c]]
                         [pk.sub.mor_to_host[pk.beta.components[i]]];
      if (lhs != pk.t_tilde.mor_map[pk.rho.components[i]]) first = false;
    }
    add("id3-pit~-ibeta", first);
    bool second = true;
    for (int c = 0; c < host.n_objects(); ++c) {
      int sc = pk.s_tilde.obj_map[c];
      int lhs = d.comp[pk.gamma.components[pk.epi.e.obj_map[c]]]
                      [pk.rho.components[sc]];
      if (lhs != pk.s_tilde.mor_map[pk.cov.pi[c]]) second = false;
    }
    add("id3-gammae-rhos~", second);
  }

  // (4) T~gamma = I eta and S beta . F eps~ = eps F.
  {
    bool first = true;
    for (int bo = 0; bo < b.n_objects(); ++bo) {
      if (pk.t_tilde.mor_map[pk.gamma.components[bo]] !=
          pk.sub.mor_to_host[pk.dual.eta.components[bo]]) {
        first = false;
      }
    }
    add("id4-t~gamma-ieta", first);
    bool second = true;
    for (std::size_t i = 0; i < pk.d_objects.size(); ++i) {
      int lhs = a.comp[pk.dual.s.mor_map[pk.beta.components[i]]]
                      [pk.f_proj.mor_map[pk.eps_tilde.components[i]]];
      if (lhs != pk.dual.eps.components[pk.d_objects[i].a_obj]) second = false;
    }
    add("id4-sbeta-feps~", second);
  }
  return out;
}

ExtensionPack extension_from_fixture(const Fixture& fx) {
  FullSubcat sub = full_subcategory(fx.host, fx.sub_objects);
  DualityData dual = formal_dual(sub.cat);
  return build_extension(fx.host, sub, fx.covering, dual, fx.chosen_pi);
}

}  // namespace finduality
