#pragma once

#include <vector>

#include "finduality/contact.hpp"
#include "finduality/stdcontact.hpp"
#include "finduality/topology.hpp"

namespace finduality {

/// A candidate de Vries morphism between contact algebras, with every flag
/// recomputed from the table by check_dv. Fed morphisms are exactly the
/// sup-preserving Boolean homomorphisms satisfying condition (F).
struct DVMap {
  ContactRelation source;
  ContactRelation target;
  std::vector<Elem> table;

  bool dv1 = false;  // phi(0) = 0
  bool dv2 = false;  // phi(a /\ b) = phi(a) /\ phi(b)
  bool dv3 = false;  // a << b  =>  (phi(a*))* << phi(b)
  bool dv4 = false;  // phi(a) = sup{phi(b) : b << a}
  bool is_boolean_hom = false;
  bool is_sup_preserving = false;
  bool condition_f = false;        // phi(a) C' phi(b) => a C b
  bool condition_f_prime = false;  // a << b => phi(a) <<' phi(b)

  bool is_dv() const { return dv1 && dv2 && dv3 && dv4; }
  bool is_fed() const {
    return is_boolean_hom && is_sup_preserving && condition_f;
  }

  Elem operator()(Elem a) const { return table[a]; }
};

/// Evaluates every DV axiom and both Fedorchuk conditions by direct
/// quantification. Throws ShapeMismatch on a table of the wrong size or
/// with out-of-universe entries.
DVMap check_dv(const std::vector<Elem>& table, const ContactRelation& src,
               const ContactRelation& tgt);

DVMap dv_identity(const ContactRelation& c);

/// The check-operator: psi-check(a) = sup{psi(b) : b <<_C a}, with C the
/// source contact.
std::vector<Elem> cuk(const std::vector<Elem>& psi, const ContactRelation& src,
                      const FinBoolAlg& tgt);

/// Diamond composition phi2 <> phi1 = (phi2 . phi1)-check. Throws
/// NotComposable when the middle contact algebras disagree.
std::vector<Elem> diamond(const DVMap& phi2, const DVMap& phi1);

struct DVMorphismFacts {
  bool preserves_top = false;       // phi(1) = 1
  bool complement_bound = false;    // phi(a*) <= phi(a)*
  bool preserves_ll = false;        // a << b => phi(a) <<' phi(b)
  bool all() const {
    return preserves_top && complement_bound && preserves_ll;
  }
};

/// The standard consequences of DV1-DV4; throws NotDVMorphism when any of
/// the four axioms fails on the input.
DVMorphismFacts fact_dvm_checks(const DVMap& phi);

// ---------------------------------------------------------------------------
// The functor Psi^t

/// Object part: (RC(X), rho_X). Identical to standard_contact, re-exported
/// under the functor's name for symmetry with psi_a.
StandardContact psi_t(const FinTopSpace& space);

/// Morphism part of Psi^t for f : X -> Y, running contravariantly:
/// a table RC(Y) -> RC(X), G |-> cl(f^{-1}(int G)).
struct PsiTMorphism {
  StandardContact source;  // RC(Y)
  StandardContact target;  // RC(X)
  std::vector<Elem> table;
};

PsiTMorphism psi_t_mor(const ContMap& f);

// ---------------------------------------------------------------------------
// The functor Psi^a

/// The cluster space of a contact algebra: points are the clusters,
/// topologized by taking {upsilon(a) : a in A} as a base of closed sets
/// (the opens are generated from their complements by explicit closure
/// under union and intersection).
struct ClusterSpace {
  ContactRelation contact;
  std::vector<Cluster> clusters;
  FinTopSpace space;

  PointSet upsilon(Elem a) const;  // {sigma : a in sigma}
};

/// Requires C1-C4 (throws NotContact); normality is not needed to build the
/// space, only for the duality-theorem guarantees.
ClusterSpace psi_a(const ContactRelation& c);

/// Morphism part of Psi^a for phi : (A,C) -> (A',C'), running
/// contravariantly from CL(A',C') to CL(A,C) by the general formula
/// sigma' |-> {a : forall b (b <<_C a* => phi(b)* in sigma')}.
/// For non-normal sources the formula can land outside the cluster set;
/// such points keep their raw value and get table entry -1.
struct PsiAMorphism {
  ClusterSpace domain;    // CL(A', C')
  ClusterSpace codomain;  // CL(A, C)
  std::vector<ElemSet> raw;
  std::vector<int> table;  // index into codomain.clusters, or -1
  bool all_clusters = false;
};

PsiAMorphism psi_a_mor(const DVMap& phi);

/// The Boolean-homomorphism shortcut sigma_{u'} |-> sigma_{phi^{-1}(u')}.
/// Throws PreconditionFailed unless phi is a Boolean hom and every domain
/// cluster is generated by an ultrafilter.
std::vector<int> psi_a_mor_simplified(const DVMap& phi);

}  // namespace finduality
