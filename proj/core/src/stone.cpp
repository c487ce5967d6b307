#include "finduality/stone.hpp"

#include <algorithm>

namespace finduality {

FinTopSpace stone_space(const FinBoolAlg& alg) {
  return discrete_space(alg.n_atoms());
}

FinBoolAlg clopen_algebra(const FinTopSpace& space) {
  if (!space.is_discrete()) {
    throw NotStone("a finite Stone space must be discrete");
  }
  return FinBoolAlg(space.n_points());
}

ContMap dual_of_hom(const BoolHom& h) {
  FinTopSpace src = stone_space(h.target);
  FinTopSpace tgt = stone_space(h.source);
  // u principal at atom j pulls back along h to the principal ultrafilter
  // at the atom carrying h's point map value.
  std::vector<int> table = h.point_map;
  // Cross-check against the definition u |-> h^{-1}(u).
  auto ults_src = ultrafilters(h.target);
  for (std::size_t j = 0; j < ults_src.size(); ++j) {
    ElemSet preim = 0;
    for (Elem a = 0; a < h.source.size(); ++a) {
      if (ults_src[j].carrier & (ElemSet{1} << h.table[a])) {
        preim |= ElemSet{1} << a;
      }
    }
    if (!is_ultrafilter_set(h.source, preim)) {
      throw InternalContradiction("hom preimage of an ultrafilter broke");
    }
    auto uts = ultrafilters(h.source);
    if (uts[static_cast<std::size_t>(table[j])].carrier != preim) {
      throw InternalContradiction("point map disagrees with the preimage");
    }
  }
  return ContMap{std::move(src), std::move(tgt), std::move(table)};
}

BoolHom dual_of_map(const ContMap& f) {
  FinBoolAlg src = clopen_algebra(f.target);
  FinBoolAlg tgt = clopen_algebra(f.source);
  std::vector<Elem> table(src.size());
  for (Elem v = 0; v < src.size(); ++v) {
    table[v] = static_cast<Elem>(f.preimage(static_cast<PointSet>(v)));
  }
  return BoolHom::from_table(src, tgt, table);
}

BoolHom unit_hom(const FinBoolAlg& alg) {
  FinBoolAlg co = clopen_algebra(stone_space(alg));
  auto ults = ultrafilters(alg);
  std::vector<Elem> table(alg.size(), 0);
  for (Elem a = 0; a < alg.size(); ++a) {
    for (std::size_t i = 0; i < ults.size(); ++i) {
      if (ults[i].carrier & (ElemSet{1} << a)) table[a] |= Elem{1} << i;
    }
  }
  return BoolHom::from_table(alg, co, table);
}

ContMap counit_map(const FinTopSpace& space) {
  FinBoolAlg co = clopen_algebra(space);
  auto ults = ultrafilters(co);
  std::vector<int> table(static_cast<std::size_t>(space.n_points()), -1);
  for (int x = 0; x < space.n_points(); ++x) {
    // clopens containing x
    ElemSet carrier = 0;
    for (Elem v = 0; v < co.size(); ++v) {
      if (v & (Elem{1} << x)) carrier |= ElemSet{1} << v;
    }
    for (std::size_t i = 0; i < ults.size(); ++i) {
      if (ults[i].carrier == carrier) table[x] = static_cast<int>(i);
    }
    if (table[x] < 0) {
      throw InternalContradiction("point filter is not an ultrafilter");
    }
  }
  return ContMap{space, stone_space(co), std::move(table)};
}

// ---------------------------------------------------------------------------

StonePack duality_pack(int max_atoms) {
  if (max_atoms < 0 || max_atoms > kDefaultAtomBound) {
    throw BoundExceeded("duality pack scale out of range");
  }
  StonePack pack;

  // Category of algebras B_0..B_max with every homomorphism.
  pack.alg_cat.name = "FinBool<=" + std::to_string(max_atoms);
  for (int n = 0; n <= max_atoms; ++n) {
    pack.alg_cat.objects.push_back("B" + std::to_string(n));
    pack.algebras.emplace_back(n);
  }
  for (int m = 0; m <= max_atoms; ++m) {
    for (int n = 0; n <= max_atoms; ++n) {
      for (BoolHom& h : all_homs(pack.algebras[m], pack.algebras[n])) {
        std::string nm = "h" + std::to_string(m) + std::to_string(n);
        for (int v : h.point_map) nm += "_" + std::to_string(v);
        pack.alg_cat.morphisms.push_back({nm, m, n});
        pack.alg_homs.push_back(std::move(h));
      }
    }
  }
  const int nm = pack.alg_cat.n_morphisms();
  auto find_hom = [&](int dom, int cod, const std::vector<Elem>& table) {
    for (int k = 0; k < nm; ++k) {
      if (pack.alg_cat.dom(k) == dom && pack.alg_cat.cod(k) == cod &&
          pack.alg_homs[k].table == table) {
        return k;
      }
    }
    throw InternalContradiction("hom missing from the enumeration");
  };
  pack.alg_cat.id_of.resize(pack.alg_cat.n_objects());
  for (int n = 0; n <= max_atoms; ++n) {
    pack.alg_cat.id_of[n] =
        find_hom(n, n, BoolHom::identity(pack.algebras[n]).table);
    pack.alg_cat.morphisms[pack.alg_cat.id_of[n]].name = "id_B" + std::to_string(n);
  }
  pack.alg_cat.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      if (pack.alg_cat.cod(f) != pack.alg_cat.dom(g)) continue;
      BoolHom gf = compose(pack.alg_homs[g], pack.alg_homs[f]);
      pack.alg_cat.comp[g][f] =
          find_hom(pack.alg_cat.dom(f), pack.alg_cat.cod(g), gf.table);
    }
  }
  {
    CategoryCheck ck = validate_category(pack.alg_cat);
    if (!ck.ok) throw InternalContradiction("algebra category: " + ck.failure);
  }

  // Category of discrete spaces of the matching sizes with every map.
  std::vector<int> sizes;
  for (int n = 0; n <= max_atoms; ++n) sizes.push_back(n);
  FinSetCategory fs = finset_category(sizes, "FinStone<=" + std::to_string(max_atoms));
  pack.top_cat = fs.cat;
  for (int o = 0; o < pack.top_cat.n_objects(); ++o) {
    pack.spaces.push_back(discrete_space(sizes[o]));
  }
  for (int k = 0; k < pack.top_cat.n_morphisms(); ++k) {
    pack.top_maps.push_back(ContMap{pack.spaces[pack.top_cat.dom(k)],
                                    pack.spaces[pack.top_cat.cod(k)],
                                    fs.tables[k]});
  }
  auto find_map = [&](int dom, int cod, const std::vector<int>& table) {
    for (int k = 0; k < pack.top_cat.n_morphisms(); ++k) {
      if (pack.top_cat.dom(k) == dom && pack.top_cat.cod(k) == cod &&
          fs.tables[k] == table) {
        return k;
      }
    }
    throw InternalContradiction("map missing from the enumeration");
  };

  // T = ult(-): contravariant, B_n -> X_n, hom -> its point map.
  pack.t.name = "T";
  pack.t.contravariant = true;
  pack.t.obj_map.resize(pack.alg_cat.n_objects());
  for (int n = 0; n <= max_atoms; ++n) pack.t.obj_map[n] = n;
  pack.t.mor_map.resize(nm);
  for (int k = 0; k < nm; ++k) {
    ContMap dual = dual_of_hom(pack.alg_homs[k]);
    pack.t.mor_map[k] =
        find_map(pack.alg_cat.cod(k), pack.alg_cat.dom(k), dual.table);
  }

  // S = CO(-): contravariant, X_n -> B_n, map -> the preimage hom.
  pack.s.name = "S";
  pack.s.contravariant = true;
  pack.s.obj_map = pack.t.obj_map;
  pack.s.mor_map.resize(pack.top_cat.n_morphisms());
  for (int k = 0; k < pack.top_cat.n_morphisms(); ++k) {
    BoolHom dual = dual_of_map(pack.top_maps[k]);
    pack.s.mor_map[k] =
        find_hom(pack.top_cat.cod(k), pack.top_cat.dom(k), dual.table);
  }

  pack.eta.name = "eta";
  pack.eta.components.resize(pack.alg_cat.n_objects());
  for (int n = 0; n <= max_atoms; ++n) {
    pack.eta.components[n] = find_hom(n, n, unit_hom(pack.algebras[n]).table);
  }
  pack.eps.name = "eps";
  pack.eps.components.resize(pack.top_cat.n_objects());
  for (int n = 0; n <= max_atoms; ++n) {
    pack.eps.components[n] = find_map(n, n, counit_map(pack.spaces[n]).table);
  }

  auto record = [&](const CategoryCheck& ck, bool& flag) {
    flag = ck.ok;
    if (!ck.ok && pack.failure.empty()) pack.failure = ck.failure;
    return ck.ok;
  };
  bool t_ok = false, s_ok = false;
  record(validate_functor(pack.alg_cat, pack.top_cat, pack.t), t_ok);
  record(validate_functor(pack.top_cat, pack.alg_cat, pack.s), s_ok);
  pack.functors_ok = t_ok && s_ok;

  Functor st = compose_functors(pack.top_cat, pack.s, pack.t);  // A -> A
  Functor ts = compose_functors(pack.alg_cat, pack.t, pack.s);  // B -> B
  bool nat_a = false, nat_b = false;
  record(validate_nattrans(pack.alg_cat, pack.alg_cat,
                           identity_functor(pack.alg_cat), st, pack.eta),
         nat_a);
  record(validate_nattrans(pack.top_cat, pack.top_cat,
                           identity_functor(pack.top_cat), ts, pack.eps),
         nat_b);
  pack.naturality_ok = nat_a && nat_b;
  pack.nat_iso_ok = is_nat_iso(pack.alg_cat, pack.eta) &&
                    is_nat_iso(pack.top_cat, pack.eps);

  // Triangular identities: T(eta_A) after eps_{TA} = 1_{TA} and
  // S(eps_X) after eta_{SX} = 1_{SX}.
  pack.triangular_ok = true;
  for (int a = 0; a < pack.alg_cat.n_objects(); ++a) {
    int ta = pack.t.obj_map[a];
    int lhs = pack.top_cat.comp[pack.t.mor_map[pack.eta.components[a]]]
                               [pack.eps.components[ta]];
    if (lhs != pack.top_cat.id_of[ta]) {
      pack.triangular_ok = false;
      if (pack.failure.empty()) {
        pack.failure = "triangular identity fails at " + pack.alg_cat.objects[a];
      }
    }
  }
  for (int x = 0; x < pack.top_cat.n_objects(); ++x) {
    int sx = pack.s.obj_map[x];
    int lhs = pack.alg_cat.comp[pack.s.mor_map[pack.eps.components[x]]]
                               [pack.eta.components[sx]];
    if (lhs != pack.alg_cat.id_of[sx]) {
      pack.triangular_ok = false;
      if (pack.failure.empty()) {
        pack.failure = "triangular identity fails at " + pack.top_cat.objects[x];
      }
    }
  }
  return pack;
}

}  // namespace finduality
