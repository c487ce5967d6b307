#pragma once

#include <string>
#include <vector>

#include "finduality/contact.hpp"
#include "finduality/devries.hpp"
#include "finduality/stone.hpp"
#include "finduality/topology.hpp"

namespace finduality {

/// A pair (A, pi) with pi a continuous map out of the Stone space of A;
/// the flags say how far it is from being a P-morphism (closed irreducible
/// onto a Hausdorff = discrete codomain).
struct Cover {
  FinBoolAlg algebra;
  ContMap pi;
  bool surjective = false;
  bool closed_map = false;
  bool irreducible = false;
  bool hausdorff_codomain = false;

  bool in_p() const { return closed_map && irreducible; }
};

/// Validates dom(pi) = stone_space(a) and computes the flags.
Cover make_cover(const FinBoolAlg& a, const ContMap& pi);

/// C_D: a C b iff pi(s(a)) meets pi(s(b)). Computed in kernel form and
/// cross-checked against both the set form and the ultrafilter form;
/// requires pi closed irreducible (PreconditionFailed otherwise).
ContactRelation contact_of_cover(const Cover& d);

/// The natural quotient of the Stone space by R_(A,C); requires an NCA
/// (NotNormal). The returned cover is asserted irreducible with a
/// Hausdorff codomain.
Cover cover_of_contact(const ContactRelation& c);

struct NcrelIrelReport {
  std::vector<ContactRelation> ncrel;          // all NCAs on the algebra
  std::vector<std::vector<PointSet>> irel;     // all irreducible closed eqs
  bool bijection_ok = false;                   // f, g mutually inverse
  std::string detail;
};

/// Exhaustive check of the NCRel(A) <-> IRel(T(A)) bijection; atom count
/// capped at 4 (BoundExceeded).
NcrelIrelReport ncrel_irel_check(const FinBoolAlg& a);

// ---------------------------------------------------------------------------
// The functor F : Fed -> D

/// Object part F(A,C) = (A, pi_(A,C)); same construction as
/// cover_of_contact, named for the functor.
Cover fed_to_D(const ContactRelation& c);

ContactRelation d_to_fed(const Cover& d);  // = contact_of_cover

struct FedMorphism {
  BoolHom alpha;
  Cover source_cover;  // F of alpha's source contact algebra
  Cover target_cover;
  ContMap f_alpha;  // cod(pi') -> cod(pi), running backwards
  bool comf_ok = false;    // pi . T(alpha) constant on pi'-fibres
  bool square_ok = false;  // f_alpha . pi' = pi . T(alpha)
  bool quasi_open = false;
};

/// Morphism part F(alpha) = (alpha, f_alpha). Throws ConditionFFailed when
/// condition (F) fails and NotWellDefined if the fibre guard breaks
/// (impossible under (F) - kept as a separate error to keep the guard
/// honest).
FedMorphism fed_mor_to_D(const BoolHom& alpha, const ContactRelation& src,
                         const ContactRelation& tgt);

struct MorphismEquiv {
  bool condition_f = false;
  bool r_preserving = false;  // u'R'v' => T(psi)(u') R T(psi)(v')
  bool in_theorem_scope = false;  // both sides normal
  bool equivalent() const { return condition_f == r_preserving; }
};

/// Both sides of the condition-(F) characterization, computed independently.
MorphismEquiv check_morphism_equiv(const BoolHom& psi,
                                   const ContactRelation& src,
                                   const ContactRelation& tgt);

// ---------------------------------------------------------------------------
// The comparison homeomorphism h and the factorization functors

struct HHomeo {
  Cover cover;                // Psi(A,C), the quotient side
  ClusterSpace cluster_space;  // Phi^a(A,C), the cluster side
  std::vector<int> table;      // quotient point [u] -> index of sigma_u
  bool bijective = false;
  bool continuous_both_ways = false;
  bool image_formula_ok = false;  // h(pi(s(a))) = upsilon(a) for all a
};

HHomeo h_homeo(const ContactRelation& c);  // NotNormal outside NCAs

struct Factorization {
  std::vector<PointSet> r_f;  // fibre equivalence, one row per point
  Quotient q;                 // q_f
  ContMap h;                  // h_f with h_f . q_f = f
  bool h_homeomorphism = false;
};

Factorization factorize(const ContMap& f);  // NotSurjective

struct F2Report {
  Cover nqm;        // F2'(A,p) = (A, q_p)
  ContMap h_p;      // the D-isomorphism component (1_A, h_p)
  bool already_nqm = false;   // q_p = p, i.e. F2'.F2 fixed the cover
  bool iso_component = false;  // h_p is a homeomorphism
};

F2Report f2_prime(const Cover& cover);

// ---------------------------------------------------------------------------
// The finite shadow of the Psi' / Phi^t comparison

struct PsiapReport {
  StandardContact phi_t;      // (RC(X), rho_X)
  FinBoolAlg co;              // CO(EX) = CO(X), the absolute being trivial
  ContactRelation psi_prime;  // C_(A,p) for the identity cover
  bool ca_iso = false;        // phi_pi is a contact-algebra isomorphism
  std::string scope_note;
};

/// Part (a) of the comparison on a finite discrete space, where the
/// projective cover degenerates to the identity. Throws NotDiscrete.
PsiapReport finite_shadow_psiap(const FinTopSpace& x);

/// Part (b): Phi^t(f) = phi_pi . Psi'(f) . phi_pi'^{-1} for a map between
/// discrete spaces, with Psi'(f) the clopen preimage map.
bool psiap_morphism_check(const ContMap& f);

}  // namespace finduality
