#pragma once

#include "finduality/boolalg.hpp"
#include "finduality/category.hpp"
#include "finduality/topology.hpp"

namespace finduality {

/// The dual space of a finite Boolean algebra: the discrete space on its
/// ultrafilters, with point i the principal ultrafilter at atom i.
FinTopSpace stone_space(const FinBoolAlg& alg);

/// CO(X) for a finite Stone space (= discrete; throws NotStone otherwise).
/// Under the identification Elem = PointSet, element a denotes the clopen
/// set with the same bit mask.
FinBoolAlg clopen_algebra(const FinTopSpace& space);

/// h : A -> A' dualizes to the map ult(A') -> ult(A), u |-> h^{-1}(u);
/// on principal ultrafilters that is exactly h's point map.
ContMap dual_of_hom(const BoolHom& h);

/// f : X -> Y (discrete) dualizes to CO(Y) -> CO(X), F |-> f^{-1}(F).
BoolHom dual_of_map(const ContMap& f);

/// s_A : A -> CO(ult(A)), a |-> {u : a in u}, computed from the definition.
BoolHom unit_hom(const FinBoolAlg& alg);
/// t_X : X -> ult(CO(X)), x |-> the ultrafilter of clopens containing x.
ContMap counit_map(const FinTopSpace& space);

/// The whole duality at a bounded scale, packaged as finite categories with
/// attached payloads: alg_cat collects the algebras B_0..B_max with all
/// homs, top_cat the discrete spaces of matching sizes with all maps.
struct StonePack {
  FinCategory alg_cat;
  std::vector<FinBoolAlg> algebras;  // per object
  std::vector<BoolHom> alg_homs;     // per morphism

  FinCategory top_cat;
  std::vector<FinTopSpace> spaces;
  std::vector<ContMap> top_maps;

  Functor t;  // contravariant alg_cat -> top_cat
  Functor s;  // contravariant top_cat -> alg_cat
  NatTrans eta;  // Id => S.T, components the unit homs
  NatTrans eps;  // Id => T.S, components the counit maps

  bool functors_ok = false;
  bool naturality_ok = false;
  bool nat_iso_ok = false;
  bool triangular_ok = false;
  std::string failure;

  bool all_ok() const {
    return functors_ok && naturality_ok && nat_iso_ok && triangular_ok;
  }
};

StonePack duality_pack(int max_atoms);

}  // namespace finduality
