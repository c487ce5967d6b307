#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "finduality/boolalg.hpp"

namespace finduality {

// Arbitrary binary relation on the elements of a finite Boolean algebra:
// one ElemSet row per element a, bit b set iff a relates to b.
using RelTable = std::vector<ElemSet>;

/// Contact relation in canonical kernel form: a reflexive symmetric
/// relation on atoms, with the full relation derived additively
/// (a C b iff some atom of a touches some atom of b).
struct ContactRelation {
  FinBoolAlg algebra;
  std::vector<std::uint32_t> kernel;  // kernel[i] = atom mask touching atom i

  bool contact(Elem a, Elem b) const;
  bool ll(Elem a, Elem b) const {  // non-tangential inclusion a << b
    return !contact(a, algebra.complement(b));
  }
  RelTable table() const;
};

bool operator==(const ContactRelation& c, const ContactRelation& d);

struct ContactAxioms {
  bool c1 = false, c2 = false, c3 = false, c4 = false, c5 = false, c6 = false;
  bool is_ca = false;   // C1-C4
  bool is_nca = false;  // C1-C6
  // Axioms of the derived non-tangential inclusion <<.
  bool ll1 = false, ll2 = false, ll3 = false, ll4 = false, ll5 = false,
       ll6 = false, ll7 = false;
  bool ll_roundtrip = false;  // C recovered from <<
};

/// Checks every axiom by direct quantification over the element universe.
ContactAxioms check_axioms(const FinBoolAlg& alg, const RelTable& table);

ContactRelation rho_s(const FinBoolAlg& alg);  // smallest: a C b iff a /\ b != 0
ContactRelation rho_l(const FinBoolAlg& alg);  // largest: a C b iff a,b != 0

/// Canonical form construction; the kernel must be reflexive and symmetric.
ContactRelation kernel_to_contact(const FinBoolAlg& alg,
                                  const std::vector<std::uint32_t>& kernel);
/// Restriction of a full relation table to atom pairs.
std::vector<std::uint32_t> contact_to_kernel(const FinBoolAlg& alg,
                                             const RelTable& table);

/// All reflexive symmetric kernels on n atoms (2^(n(n-1)/2) of them).
std::vector<std::vector<std::uint32_t>> all_kernels(const FinBoolAlg& alg);

// ---------------------------------------------------------------------------
// Ultrafilter relation and clusters

struct UltrafilterRelation {
  std::vector<std::uint32_t> rows;  // rows[i] bit j set iff u_i R u_j
  bool reflexive = false, symmetric = false, transitive = false;
  bool is_equivalence() const { return reflexive && symmetric && transitive; }
};

/// u R v iff u x v is contained in C; requires C1-C4.
UltrafilterRelation r_relation(const ContactRelation& c);

/// Witness pair of ultrafilters per the contact criterion; empty exactly
/// when a and b are not in contact.
std::optional<std::pair<Ultrafilter, Ultrafilter>> witness_contact(
    const ContactRelation& c, Elem a, Elem b);

using Cluster = ElemSet;

bool is_cluster(const ContactRelation& c, Cluster sigma);
/// All clusters by brute force over element subsets; requires C1-C4.
std::vector<Cluster> clusters(const ContactRelation& c);

struct SigmaU {
  Cluster carrier;
  bool in_theorem_scope;  // false when the contact algebra is not normal
  bool is_cluster;
};

/// sigma_u = {a : a C b for every b in u}. The cluster guarantees only
/// apply to normal contact algebras; outside that scope the value is still
/// computed but flagged.
SigmaU sigma_u(const ContactRelation& c, const Ultrafilter& u);

}  // namespace finduality
