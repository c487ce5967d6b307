#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finduality/errors.hpp"

namespace finduality {

struct MorData {
  std::string name;
  int dom = -1;
  int cod = -1;
};

/// Finite category given by explicit object/morphism lists and a total
/// composition table; comp[g][f] is the index of g after f, -1 when the
/// pair is not composable.
struct FinCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorData> morphisms;
  std::vector<std::vector<int>> comp;
  std::vector<int> id_of;  // object -> identity morphism index

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_morphisms() const { return static_cast<int>(morphisms.size()); }

  int dom(int m) const { return morphisms.at(m).dom; }
  int cod(int m) const { return morphisms.at(m).cod; }
  int identity(int obj) const { return id_of.at(obj); }

  /// g after f; throws NotComposable when cod(f) != dom(g).
  int compose(int g, int f) const;

  int object_index(const std::string& n) const;    // -1 when absent
  int morphism_index(const std::string& n) const;  // -1 when absent

  std::vector<int> hom(int x, int y) const;
  bool is_iso(int m) const;
  std::optional<int> inverse(int m) const;
};

struct CategoryCheck {
  bool ok = false;
  std::string failure;
};

/// Shape, identity, closure-under-composition and associativity checks.
CategoryCheck validate_category(const FinCategory& c);

/// Same morphism set with dom/cod swapped and the composition transposed.
FinCategory opposite(const FinCategory& c);

struct FullSubcat {
  FinCategory cat;
  std::vector<int> obj_to_host;
  std::vector<int> mor_to_host;
  std::vector<int> host_mor_to_sub;  // -1 for host morphisms left out

  int embed_obj(int o) const { return obj_to_host.at(o); }
  int embed_mor(int m) const { return mor_to_host.at(m); }
};

FullSubcat full_subcategory(const FinCategory& host,
                            const std::vector<int>& object_indices);

// ---------------------------------------------------------------------------
// Functors and natural transformations

/// Functor as plain data; a contravariant F sends f : x -> y to
/// F(f) : F(y) -> F(x).
struct Functor {
  std::string name;
  bool contravariant = false;
  std::vector<int> obj_map;  // objects of the source -> objects of the target
  std::vector<int> mor_map;  // morphisms likewise
};

CategoryCheck validate_functor(const FinCategory& src, const FinCategory& tgt,
                               const Functor& f);

Functor identity_functor(const FinCategory& c);
/// g after f; contravariant when exactly one factor is.
Functor compose_functors(const FinCategory& mid, const Functor& g,
                         const Functor& f);

bool functor_eq(const Functor& f, const Functor& g);

/// Natural transformation between parallel functors src -> tgt of equal
/// variance: one target morphism per source object.
struct NatTrans {
  std::string name;
  std::vector<int> components;
};

CategoryCheck validate_nattrans(const FinCategory& src, const FinCategory& tgt,
                                const Functor& f, const Functor& g,
                                const NatTrans& eta);

bool is_nat_iso(const FinCategory& tgt, const NatTrans& eta);

// ---------------------------------------------------------------------------
// Builders and fixtures

class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name);

  int add_object(const std::string& n);
  int add_morphism(const std::string& n, int dom, int cod);
  void set_compose(int g, int f, int gf);

  /// Fills identity compositions, checks totality on composable pairs and
  /// validates the result.
  FinCategory build();

 private:
  FinCategory cat_;
};

/// The category of finite sets {0..size-1} for the given sizes, with all
/// functions as morphisms. Doubles as discrete spaces with all (continuous)
/// maps.
struct FinSetCategory {
  FinCategory cat;
  std::vector<int> sizes;                          // per object
  std::vector<std::vector<int>> tables;            // per morphism
};

FinSetCategory finset_category(const std::vector<int>& sizes,
                               const std::string& name = "FinSet");

struct Fixture {
  std::string name;
  FinCategory host;
  std::vector<int> sub_objects;  // objects spanning the full subcategory B
  std::vector<int> covering;     // morphism indices forming P
  // Optional chosen projection per host object (object -> morphism in P).
  std::optional<std::vector<int>> chosen_pi;
};

/// Plain-text fixture format: one directive per line
/// (fixture/object/morphism/compose/sub/cover/pi), '#' comments.
Fixture parse_fixture(const std::string& text);
std::string serialize_fixture(const Fixture& fx);

/// Built-in fixtures: "syncat1", "syncat2", "topcat".
Fixture builtin_fixture(const std::string& name);

}  // namespace finduality
