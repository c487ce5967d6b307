#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finduality/category.hpp"
#include "finduality/covering.hpp"

namespace finduality {

/// A dual equivalence T : A <-> B : S with natural isomorphisms
/// eta : Id_B => T.S and eps : Id_A => S.T satisfying the triangular
/// identities. B is presented as a full subcategory of some host.
struct DualityData {
  FinCategory a;
  Functor t;     // a -> b, contravariant
  Functor s;     // b -> a, contravariant
  NatTrans eta;  // in b
  NatTrans eps;  // in a
};

/// The formal dual: A = B^op with T and S the canonical contravariant
/// identifications and identity units. Always a valid dual equivalence.
DualityData formal_dual(const FinCategory& b);

struct CategoryD {
  int a_obj;  // object of A
  int p;      // host morphism in P with dom(p) = (embedded) T(a_obj)
};

struct DMorData {
  int phi;  // morphism of A
  int f;    // host morphism, running backwards
};

struct NamedCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// The extended duality: the category D of pairs (A, p), the lifted
/// functors and all companion transformations of the construction.
struct ExtensionPack {
  FinCategory host;
  FullSubcat sub;
  std::vector<int> covering;
  DualityData dual;
  CoveringReport cov;
  EPiData epi;

  FinCategory d;
  std::vector<CategoryD> d_objects;
  std::vector<DMorData> d_morphisms;

  Functor t_tilde;  // d -> host, contravariant
  Functor s_tilde;  // host -> d, contravariant
  Functor j;        // a -> d
  Functor f_proj;   // d -> a
  NatTrans eta_tilde;  // Id_host => T~.S~
  NatTrans eps_tilde;  // Id_D => S~.T~
  NatTrans rho;        // Id_D => J.F
  NatTrans beta;       // components in B: TA -> EC, stored as sub morphisms
  NatTrans gamma;      // J.S => S~.I, components D-morphisms

  int d_object_index(int a_obj, int p) const;
  int d_morphism_index(int src, int dst, int phi, int f) const;
};

/// Builds D and every companion. Requires a rigid covering class (P4*);
/// throws RigidityRequired otherwise.
ExtensionPack build_extension(const FinCategory& host, const FullSubcat& sub,
                              const std::vector<int>& covering,
                              const DualityData& dual,
                              const std::optional<std::vector<int>>& chosen_pi =
                                  std::nullopt);

/// Re-verifies the whole construction from scratch: category laws for D,
/// functoriality, naturality, and the identities (1)-(4) of the extension,
/// plus the triangular identities and corigidity of rho.
std::vector<NamedCheck> verify_extension(const ExtensionPack& pack);

/// Convenience: covering-class flags plus the extension checks for a
/// fixture, using the formal dual of its subcategory.
ExtensionPack extension_from_fixture(const Fixture& fx);

}  // namespace finduality
