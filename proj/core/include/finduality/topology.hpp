#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finduality/boolalg.hpp"
#include "finduality/errors.hpp"

namespace finduality {

// A set of points of a finite space, as a bit mask.
using PointSet = std::uint32_t;

/// Finite topological space: an explicit open-set family over n_points,
/// validated at construction to contain the empty set and the whole space
/// and to be closed under pairwise union and intersection.
class FinTopSpace {
 public:
  FinTopSpace(int n_points, std::vector<PointSet> opens);

  int n_points() const { return n_points_; }
  PointSet full() const {
    return n_points_ == 0 ? 0 : (PointSet{1} << n_points_) - 1;
  }

  const std::vector<PointSet>& opens() const { return opens_; }
  std::vector<PointSet> closeds() const;

  bool is_open(PointSet m) const;
  bool is_closed(PointSet m) const { return is_open(full() & ~m); }

  PointSet closure(PointSet m) const;
  PointSet interior(PointSet m) const;

  bool is_discrete() const;
  /// Every point and disjoint closed set have disjoint open neighborhoods.
  bool is_regular() const;

  friend bool operator==(const FinTopSpace& x, const FinTopSpace& y) {
    return x.n_points_ == y.n_points_ && x.opens_ == y.opens_;
  }

 private:
  int n_points_;
  std::vector<PointSet> opens_;  // sorted, duplicate-free
};

FinTopSpace discrete_space(int n_points);
FinTopSpace indiscrete_space(int n_points);
FinTopSpace sierpinski_space();  // opens {0}, {1}, {0,1} on points {0,1}
/// Three points {a=0, b=1, c=2} with opens {}, {a}, {c}, {a,c}, X.
FinTopSpace pinch_space();

// ---------------------------------------------------------------------------
// Continuous maps

struct ContMap {
  FinTopSpace source;
  FinTopSpace target;
  std::vector<int> table;  // point -> point

  int operator()(int x) const { return table[x]; }
  PointSet image(PointSet m) const;
  PointSet preimage(PointSet m) const;

  static ContMap identity(const FinTopSpace& space);
};

bool operator==(const ContMap& f, const ContMap& g);
ContMap compose(const ContMap& g, const ContMap& f);
bool is_continuous(const ContMap& f);

struct MapFlags {
  bool continuous = false;
  bool open_map = false;
  bool closed_map = false;
  bool quasi_open = false;   // int(f(U)) nonempty for every nonempty open U
  bool skeletal = false;     // int(f^{-1}(cl V)) within cl(f^{-1}(V)), all open V
  bool irreducible = false;  // onto, and no proper closed set maps onto
  bool satisfies_skehj = false;  // cl(int f^{-1}F) = cl(f^{-1} int F), F regular closed
  bool perfect = false;          // closed; fibres are finite automatically
};

/// Each flag computed by direct quantification over opens/closeds/RC sets.
MapFlags map_predicates(const ContMap& f);

/// Small-image set {y : f^{-1}(y) within U}; U must be open in the source.
PointSet f_sharp(const ContMap& f, PointSet u);

/// All point tables source -> target that pass the continuity check.
std::vector<ContMap> all_continuous_maps(const FinTopSpace& source,
                                         const FinTopSpace& target);

// ---------------------------------------------------------------------------
// The regular-closed algebra RC(X)

/// RC(X) packaged as a finite Boolean algebra whose atoms are the minimal
/// nonempty regular closed sets; rc_sets maps each algebra element to the
/// regular closed set it denotes.
struct RCAlgebra {
  FinTopSpace space;
  FinBoolAlg algebra;
  std::vector<PointSet> rc_sets;  // indexed by algebra element

  PointSet set_of(Elem a) const { return rc_sets[a]; }
  Elem element_of(PointSet f) const;  // throws ShapeMismatch if not in RC(X)
};

RCAlgebra rc_algebra(const FinTopSpace& space);

/// The Alexandroff/Ponomarev isomorphism RC(X) -> RC(Y) induced by a closed
/// irreducible map, with its explicit inverse K -> cl(p^{-1}(int K)).
struct RCIso {
  RCAlgebra source_rc;
  RCAlgebra target_rc;
  std::vector<Elem> forward;  // H -> p(H)
  std::vector<Elem> inverse;
};

RCIso phi_p(const ContMap& p);

// ---------------------------------------------------------------------------
// Quotients

struct Quotient {
  FinTopSpace space;
  ContMap map;                // the class map q
  std::vector<int> class_of;  // point -> class index
};

/// Quotient by an equivalence relation given as a point-set row per point
/// (row x = the class of x). Validated reflexive/symmetric/transitive.
Quotient quotient_space(const FinTopSpace& space,
                        const std::vector<PointSet>& relation);

std::vector<PointSet> equality_relation(int n_points);
std::vector<PointSet> relation_from_classes(int n_points,
                                            const std::vector<int>& class_of);

/// True when q's topology is exactly the finest topology making q
/// continuous from its source.
bool is_quotient_map(const ContMap& q);

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kExhaustiveTopologyBound = 4;

/// Every labeled topology on n points, exactly once (n <= 4). For n = 5
/// an explicit sample_count must be given; random union/intersection
/// closures are then drawn instead of enumerating.
std::vector<FinTopSpace> enumerate_topologies(int n_points,
                                              std::optional<int> sample_count =
                                                  std::nullopt,
                                              std::uint64_t seed = 1);

bool homeomorphic(const FinTopSpace& x, const FinTopSpace& y);
/// Labeled list filtered to one representative per homeomorphism class.
std::vector<FinTopSpace> up_to_homeomorphism(const std::vector<FinTopSpace>& xs);

}  // namespace finduality
