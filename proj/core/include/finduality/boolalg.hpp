#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finduality/errors.hpp"

namespace finduality {

// An element of a finite Boolean algebra, stored as an atom bit set.
// The value doubles as the element's index in the 2^n universe.
using Elem = std::uint32_t;

// A subset of the element universe, one bit per element. With the default
// atom bound of 6 the universe has at most 64 elements, so one word suffices.
using ElemSet = std::uint64_t;

inline constexpr int kDefaultAtomBound = 6;

/// Finite Boolean algebra with 2^n_atoms elements. Meet, join and
/// complement are single word operations on atom bit sets; 0 is the empty
/// set and 1 the full set. n_atoms = 0 gives the degenerate algebra 0 = 1.
class FinBoolAlg {
 public:
  explicit FinBoolAlg(int n_atoms, int atom_bound = kDefaultAtomBound);

  int n_atoms() const { return n_atoms_; }
  std::uint32_t size() const { return 1u << n_atoms_; }

  Elem zero() const { return 0; }
  Elem one() const { return size() - 1; }

  bool is_element(Elem a) const { return a < size(); }
  Elem atom(int i) const;
  bool is_atom(Elem a) const { return a != 0 && (a & (a - 1)) == 0; }

  Elem meet(Elem a, Elem b) const { return a & b; }
  Elem join(Elem a, Elem b) const { return a | b; }
  Elem complement(Elem a) const { return one() & ~a; }
  bool leq(Elem a, Elem b) const { return (a & ~b) == 0; }

  // Finiteness makes the algebra complete; sup/inf of arbitrary element
  // families are just folded joins/meets.
  Elem sup(const std::vector<Elem>& xs) const;
  Elem inf(const std::vector<Elem>& xs) const;

  void set_label(Elem a, std::string label);
  std::string label(Elem a) const;

  friend bool operator==(const FinBoolAlg& x, const FinBoolAlg& y) {
    return x.n_atoms_ == y.n_atoms_;
  }

 private:
  int n_atoms_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Homomorphisms

struct HomCheck {
  bool is_hom = false;
  bool preserves_all_suprema = false;
  // atoms(target) -> atoms(source); present exactly when is_hom holds.
  std::optional<std::vector<int>> point_map;
  std::string failure;  // which law broke, for diagnostics
};

/// Validates an arbitrary element table src -> tgt against the Boolean
/// homomorphism laws. When the table is a homomorphism, recovers the unique
/// atom-level point map g with h(a) = g^{-1}(a) and certifies
/// sup-preservation (by exhaustive subset enumeration when the source has
/// at most 16 elements, by reduction to finite joins otherwise).
HomCheck check_hom(const FinBoolAlg& src, const FinBoolAlg& tgt,
                   const std::vector<Elem>& table);

/// A validated Boolean homomorphism, stored as a full element table plus
/// the atom-level point map that determines it.
struct BoolHom {
  FinBoolAlg source;
  FinBoolAlg target;
  std::vector<Elem> table;
  std::vector<int> point_map;  // atoms(target) -> atoms(source)

  Elem operator()(Elem a) const { return table[a]; }

  static BoolHom from_table(const FinBoolAlg& src, const FinBoolAlg& tgt,
                            const std::vector<Elem>& table);
  static BoolHom from_point_map(const FinBoolAlg& src, const FinBoolAlg& tgt,
                                const std::vector<int>& point_map);
  static BoolHom identity(const FinBoolAlg& alg);
};

bool operator==(const BoolHom& f, const BoolHom& g);

/// g after f; throws NotComposable on a source/target mismatch.
BoolHom compose(const BoolHom& g, const BoolHom& f);

/// All Boolean homomorphisms src -> tgt, enumerated through point maps.
std::vector<BoolHom> all_homs(const FinBoolAlg& src, const FinBoolAlg& tgt);

// ---------------------------------------------------------------------------
// Filters

struct Ultrafilter {
  int principal_atom;
  ElemSet carrier;  // bit e set iff element e belongs to the filter
};

/// The ultrafilters of a finite Boolean algebra: exactly one principal
/// filter per atom. Empty for the degenerate algebra.
std::vector<Ultrafilter> ultrafilters(const FinBoolAlg& alg);

bool is_filter_set(const FinBoolAlg& alg, ElemSet s);
bool is_ultrafilter_set(const FinBoolAlg& alg, ElemSet s);

struct FilterResult {
  bool proper = false;  // false = the Improper marker (0 would be forced in)
  ElemSet carrier = 0;  // the generated filter, when proper
  bool is_filter = false;       // of the generated set
  bool is_ultrafilter = false;  // of the generated set
  std::optional<int> principal_atom;
};

/// Least filter containing S, or the Improper marker when that filter
/// would contain 0. Improper is a value, not an error.
FilterResult filter_ops(const FinBoolAlg& alg, const std::vector<Elem>& gens);

// Convenience: the element-set mask {e : pred(e)} and iteration helpers.
ElemSet elemset_of_carrier(const FinBoolAlg& alg, const std::vector<Elem>& xs);
std::vector<Elem> carrier_of_elemset(const FinBoolAlg& alg, ElemSet s);

}  // namespace finduality
