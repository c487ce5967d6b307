#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "finduality/category.hpp"

namespace finduality {

/// The chosen fill-ins of P5 squares: (p, v, p') with p, p' in the covering
/// class and v : cod(p) -> cod(p') maps to the morphism h : dom(p) -> dom(p')
/// with v.p = p'.h. All indices refer to host morphisms.
struct HatTable {
  std::map<std::tuple<int, int, int>, int> choice;

  int at(int p, int v, int p_prime) const;
  bool has(int p, int v, int p_prime) const {
    return choice.count({p, v, p_prime}) != 0;
  }
};

struct CoveringReport {
  bool p1 = false;        // domains lie in B
  bool p2 = false;        // identities of B-objects are in P
  bool p2_prime = false;  // all B-isomorphisms are in P
  bool p3 = false;        // P closed under precomposition with B-isos
  bool p4 = false;        // every object is covered
  bool p4_prime = false;  // a chosen pi_C exists, = 1_C on B-objects
  bool p4_star = false;   // the chosen pi_C are rigid
  bool p5 = false;        // functorial square fill-ins exist
  bool p5_star = false;   // every square has exactly one fill-in

  bool is_covering() const { return p1 && p2 && p3 && p4 && p5; }
  bool is_rigid() const { return is_covering() && p4_star; }

  std::string witness;  // first failure, e.g. the empty P5 square
  std::vector<int> pi;  // chosen cover per host object (when p4 holds)
  std::optional<HatTable> hats;
};

/// Checks P1-P5 and the starred/primed variants against the host category,
/// the full subcategory B and the proposed morphism class. When chosen_pi is
/// absent, a choice is made (identities on B-objects first).
CoveringReport check_covering_class(const FinCategory& host,
                                    const FullSubcat& sub,
                                    const std::vector<int>& covering,
                                    const std::optional<std::vector<int>>&
                                        chosen_pi = std::nullopt);

/// E and pi derived from a covering report: EC = dom(pi_C) as a B-object,
/// Ev the chosen hat of v between the chosen covers.
struct EPiData {
  Functor e;    // host -> sub.cat, covariant
  NatTrans pi;  // I.E => Id_host, components the chosen covers
  bool e_ok = false;
  bool pi_natural = false;
  bool pi_iso_on_b = false;   // pi_B is an isomorphism for B-objects
  bool pi_identity_on_b = false;  // the sharper normalization pi_B = 1_B
  bool ei_identity = false;       // E restricted to B is the identity
  std::string failure;
};

EPiData derive_E_pi(const FinCategory& host, const FullSubcat& sub,
                    const CoveringReport& report);

/// P_pi = {p : B -> C | B in |B|, p = pi_C . beta for a B-isomorphism beta},
/// returned as a sorted list of host morphism indices.
std::vector<int> derive_P_from_pi(const FinCategory& host, const FullSubcat& sub,
                                  const std::vector<int>& pi);

/// The semi-adjunction data of the inclusion I : B -> host given E and pi.
struct SemiAdjointReport {
  NatTrans sigma;  // Id_B => E.I
  bool triangular = false;      // pi I . I sigma = 1_I
  bool fully = false;           // sigma an isomorphism (I full and faithful)
  bool left_adjoint = false;    // IE(pi) = pi(IE) componentwise
  std::string failure;
};

SemiAdjointReport check_semi_adjoint(const FinCategory& host,
                                     const FullSubcat& sub, const EPiData& ep);

}  // namespace finduality
