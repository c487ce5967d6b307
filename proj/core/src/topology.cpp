#include "finduality/topology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

namespace finduality {

namespace {

std::string set_str(PointSet m, int n) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (m & (PointSet{1} << i)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

FinTopSpace::FinTopSpace(int n_points, std::vector<PointSet> opens)
    : n_points_(n_points), opens_(std::move(opens)) {
  if (n_points < 0 || n_points > 30) {
    throw ShapeMismatch("unsupported point count");
  }
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (PointSet u : opens_) {
    if (u & ~full()) throw ShapeMismatch("open set outside the point universe");
  }
  auto has = [&](PointSet m) {
    return std::binary_search(opens_.begin(), opens_.end(), m);
  };
  if (!has(0)) throw NotATopology("missing the empty set");
  if (!has(full())) throw NotATopology("missing the whole space");
  for (PointSet u : opens_) {
    for (PointSet v : opens_) {
      if (!has(u | v)) {
        throw NotATopology("union of " + set_str(u, n_points_) + " and " +
                           set_str(v, n_points_) + " is missing");
      }
      if (!has(u & v)) {
        throw NotATopology("intersection of " + set_str(u, n_points_) +
                           " and " + set_str(v, n_points_) + " is missing");
      }
    }
  }
}

std::vector<PointSet> FinTopSpace::closeds() const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (PointSet u : opens_) out.push_back(full() & ~u);
  std::sort(out.begin(), out.end());
  return out;
}

bool FinTopSpace::is_open(PointSet m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

PointSet FinTopSpace::closure(PointSet m) const {
  PointSet acc = full();
  for (PointSet u : opens_) {
    PointSet c = full() & ~u;
    if ((m & ~c) == 0) acc &= c;
  }
  return acc;
}

PointSet FinTopSpace::interior(PointSet m) const {
  PointSet acc = 0;
  for (PointSet u : opens_) {
    if ((u & ~m) == 0) acc |= u;
  }
  return acc;
}

bool FinTopSpace::is_discrete() const {
  return opens_.size() == (std::size_t{1} << n_points_);
}

bool FinTopSpace::is_regular() const {
  for (int x = 0; x < n_points_; ++x) {
    PointSet px = PointSet{1} << x;
    for (PointSet f : closeds()) {
      if (f & px) continue;
      bool separated = false;
      for (PointSet u : opens_) {
        if (!(u & px)) continue;
        for (PointSet v : opens_) {
          if ((f & ~v) == 0 && (u & v) == 0) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated && f != 0) return false;
    }
  }
  return true;
}

FinTopSpace discrete_space(int n_points) {
  std::vector<PointSet> opens;
  PointSet full = n_points == 0 ? 0 : (PointSet{1} << n_points) - 1;
  for (PointSet m = 0;; ++m) {
    opens.push_back(m);
    if (m == full) break;
  }
  return FinTopSpace(n_points, std::move(opens));
}

FinTopSpace indiscrete_space(int n_points) {
  PointSet full = n_points == 0 ? 0 : (PointSet{1} << n_points) - 1;
  return FinTopSpace(n_points, {0, full});
}

FinTopSpace sierpinski_space() { return FinTopSpace(2, {0, 0b10, 0b11}); }

FinTopSpace pinch_space() {
  return FinTopSpace(3, {0, 0b001, 0b100, 0b101, 0b111});
}

// ---------------------------------------------------------------------------

PointSet ContMap::image(PointSet m) const {
  PointSet out = 0;
  for (int x = 0; x < source.n_points(); ++x) {
    if (m & (PointSet{1} << x)) out |= PointSet{1} << table[x];
  }
  return out;
}

PointSet ContMap::preimage(PointSet m) const {
  PointSet out = 0;
  for (int x = 0; x < source.n_points(); ++x) {
    if (m & (PointSet{1} << table[x])) out |= PointSet{1} << x;
  }
  return out;
}

ContMap ContMap::identity(const FinTopSpace& space) {
  std::vector<int> table(static_cast<std::size_t>(space.n_points()));
  std::iota(table.begin(), table.end(), 0);
  return ContMap{space, space, std::move(table)};
}

bool operator==(const ContMap& f, const ContMap& g) {
  return f.source == g.source && f.target == g.target && f.table == g.table;
}

ContMap compose(const ContMap& g, const ContMap& f) {
  if (!(f.target == g.source)) throw NotComposable("map types do not match");
  std::vector<int> table(f.table.size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = g.table[f.table[x]];
  return ContMap{f.source, g.target, std::move(table)};
}

bool is_continuous(const ContMap& f) {
  if (f.table.size() != static_cast<std::size_t>(f.source.n_points())) {
    throw ShapeMismatch("map table must be total on the source points");
  }
  for (int v : f.table) {
    if (v < 0 || v >= f.target.n_points()) {
      throw ShapeMismatch("map table value outside the target points");
    }
  }
  for (PointSet v : f.target.opens()) {
    if (!f.source.is_open(f.preimage(v))) return false;
  }
  return true;
}

MapFlags map_predicates(const ContMap& f) {
  MapFlags flags;
  flags.continuous = is_continuous(f);
  const FinTopSpace& x = f.source;
  const FinTopSpace& y = f.target;

  flags.open_map = true;
  for (PointSet u : x.opens()) {
    if (!y.is_open(f.image(u))) flags.open_map = false;
  }
  flags.closed_map = true;
  for (PointSet c : x.closeds()) {
    if (!y.is_closed(f.image(c))) flags.closed_map = false;
  }
  flags.quasi_open = true;
  for (PointSet u : x.opens()) {
    if (u != 0 && y.interior(f.image(u)) == 0) flags.quasi_open = false;
  }
  flags.skeletal = true;
  for (PointSet v : y.opens()) {
    PointSet lhs = x.interior(f.preimage(y.closure(v)));
    PointSet rhs = x.closure(f.preimage(v));
    if (lhs & ~rhs) flags.skeletal = false;
  }
  flags.irreducible = f.image(x.full()) == y.full();
  if (flags.irreducible) {
    for (PointSet c : x.closeds()) {
      if (c != x.full() && f.image(c) == y.full()) flags.irreducible = false;
    }
  }
  flags.satisfies_skehj = true;
  for (PointSet g : rc_algebra(y).rc_sets) {
    PointSet lhs = x.closure(x.interior(f.preimage(g)));
    PointSet rhs = x.closure(f.preimage(y.interior(g)));
    if (lhs != rhs) flags.satisfies_skehj = false;
  }
  flags.perfect = flags.closed_map;  // finite fibres are automatic
  return flags;
}

PointSet f_sharp(const ContMap& f, PointSet u) {
  if (!f.source.is_open(u)) throw NotOpen("f_sharp requires an open set");
  PointSet out = 0;
  for (int yp = 0; yp < f.target.n_points(); ++yp) {
    PointSet fibre = f.preimage(PointSet{1} << yp);
    if ((fibre & ~u) == 0) out |= PointSet{1} << yp;
  }
  return out;
}

std::vector<ContMap> all_continuous_maps(const FinTopSpace& source,
                                         const FinTopSpace& target) {
  std::vector<ContMap> out;
  const int n = source.n_points(), m = target.n_points();
  if (n == 0) {
    out.push_back(ContMap{source, target, {}});
    return out;
  }
  if (m == 0) return out;
  std::vector<int> table(static_cast<std::size_t>(n), 0);
  while (true) {
    ContMap f{source, target, table};
    if (is_continuous(f)) out.push_back(std::move(f));
    int i = 0;
    while (i < n && ++table[i] == m) table[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

RCAlgebra rc_algebra(const FinTopSpace& space) {
  std::vector<PointSet> rc;
  PointSet full = space.full();
  for (PointSet f = 0;; ++f) {
    if (space.closure(space.interior(f)) == f) rc.push_back(f);
    if (f == full) break;
  }
  // Atoms: minimal nonempty members.
  std::vector<PointSet> atoms;
  for (PointSet f : rc) {
    if (f == 0) continue;
    bool minimal = true;
    for (PointSet g : rc) {
      if (g != 0 && g != f && (g & ~f) == 0) minimal = false;
    }
    if (minimal) atoms.push_back(f);
  }
  if ((std::size_t{1} << atoms.size()) != rc.size()) {
    throw InternalContradiction("RC(X) is not atomically Boolean");
  }
  FinBoolAlg alg(static_cast<int>(atoms.size()),
                 std::max<int>(kDefaultAtomBound, static_cast<int>(atoms.size())));
  std::vector<PointSet> rc_sets(alg.size());
  for (Elem e = 0; e < alg.size(); ++e) {
    PointSet u = 0;  // join in RC(X) is plain union
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (e & (Elem{1} << i)) u |= atoms[i];
    }
    rc_sets[e] = u;
  }
  // The atom-set map must be a bijection onto the RC family with the
  // Boolean operations matching cl/int arithmetic; anything else would
  // falsify the construction, so abort loudly.
  std::vector<PointSet> sorted(rc_sets.begin(), rc_sets.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != rc) throw InternalContradiction("RC atom spans diverge");
  RCAlgebra out{space, alg, std::move(rc_sets)};
  for (Elem a = 0; a < alg.size(); ++a) {
    PointSet fa = out.rc_sets[a];
    PointSet star = space.closure(full & ~fa);
    if (star != out.rc_sets[alg.complement(a)]) {
      throw InternalContradiction("RC complement law fails");
    }
    for (Elem b = 0; b < alg.size(); ++b) {
      PointSet fb = out.rc_sets[b];
      if ((fa | fb) != out.rc_sets[alg.join(a, b)]) {
        throw InternalContradiction("RC join law fails");
      }
      if (space.closure(space.interior(fa & fb)) !=
          out.rc_sets[alg.meet(a, b)]) {
        throw InternalContradiction("RC meet law fails");
      }
    }
  }
  return out;
}

Elem RCAlgebra::element_of(PointSet f) const {
  for (Elem e = 0; e < algebra.size(); ++e) {
    if (rc_sets[e] == f) return e;
  }
  throw ShapeMismatch("point set is not regular closed in this space");
}

RCIso phi_p(const ContMap& p) {
  MapFlags flags = map_predicates(p);
  if (!flags.continuous) throw PreconditionFailed("phi_p: map not continuous");
  if (!flags.closed_map) throw PreconditionFailed("phi_p: map not closed");
  if (!flags.irreducible) throw PreconditionFailed("phi_p: map not irreducible");

  RCIso out{rc_algebra(p.source), rc_algebra(p.target), {}, {}};
  const RCAlgebra& src = out.source_rc;
  const RCAlgebra& tgt = out.target_rc;
  out.forward.resize(src.algebra.size());
  out.inverse.resize(tgt.algebra.size());
  for (Elem h = 0; h < src.algebra.size(); ++h) {
    out.forward[h] = tgt.element_of(p.image(src.rc_sets[h]));
  }
  for (Elem k = 0; k < tgt.algebra.size(); ++k) {
    out.inverse[k] =
        src.element_of(p.source.closure(p.preimage(p.target.interior(tgt.rc_sets[k]))));
  }
  // Mutually inverse Boolean isomorphisms, verified outright.
  HomCheck fwd = check_hom(src.algebra, tgt.algebra, out.forward);
  HomCheck inv = check_hom(tgt.algebra, src.algebra, out.inverse);
  if (!fwd.is_hom || !inv.is_hom) {
    throw InternalContradiction("phi_p image map is not a Boolean homomorphism");
  }
  for (Elem h = 0; h < src.algebra.size(); ++h) {
    if (out.inverse[out.forward[h]] != h) {
      throw InternalContradiction("phi_p inverse formula fails");
    }
  }
  for (Elem k = 0; k < tgt.algebra.size(); ++k) {
    if (out.forward[out.inverse[k]] != k) {
      throw InternalContradiction("phi_p forward of inverse fails");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<PointSet> equality_relation(int n_points) {
  std::vector<PointSet> rel(static_cast<std::size_t>(n_points));
  for (int x = 0; x < n_points; ++x) rel[x] = PointSet{1} << x;
  return rel;
}

std::vector<PointSet> relation_from_classes(int n_points,
                                            const std::vector<int>& class_of) {
  if (class_of.size() != static_cast<std::size_t>(n_points)) {
    throw ShapeMismatch("class vector must be total on the points");
  }
  std::vector<PointSet> rel(static_cast<std::size_t>(n_points), 0);
  for (int x = 0; x < n_points; ++x) {
    for (int y = 0; y < n_points; ++y) {
      if (class_of[x] == class_of[y]) rel[x] |= PointSet{1} << y;
    }
  }
  return rel;
}

Quotient quotient_space(const FinTopSpace& space,
                        const std::vector<PointSet>& relation) {
  const int n = space.n_points();
  if (relation.size() != static_cast<std::size_t>(n)) {
    throw ShapeMismatch("relation must have one row per point");
  }
  for (int x = 0; x < n; ++x) {
    if (!(relation[x] & (PointSet{1} << x))) {
      throw NotEquivalence("not reflexive at " + std::to_string(x));
    }
    for (int y = 0; y < n; ++y) {
      bool xy = relation[x] & (PointSet{1} << y);
      bool yx = relation[y] & (PointSet{1} << x);
      if (xy != yx) throw NotEquivalence("not symmetric");
      if (xy && relation[y] != relation[x]) throw NotEquivalence("not transitive");
    }
  }
  // Classes in order of least representative.
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  std::vector<PointSet> classes;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] != -1) continue;
    int c = static_cast<int>(classes.size());
    classes.push_back(relation[x]);
    for (int y = x; y < n; ++y) {
      if (relation[x] & (PointSet{1} << y)) class_of[y] = c;
    }
  }
  const int q = static_cast<int>(classes.size());
  std::vector<int> qtable(class_of.begin(), class_of.end());
  // Opens of the quotient: V with an open class-saturated preimage.
  std::vector<PointSet> qopens;
  PointSet qfull = q == 0 ? 0 : (PointSet{1} << q) - 1;
  for (PointSet v = 0;; ++v) {
    PointSet pre = 0;
    for (int x = 0; x < n; ++x) {
      if (v & (PointSet{1} << class_of[x])) pre |= PointSet{1} << x;
    }
    if (space.is_open(pre)) qopens.push_back(v);
    if (v == qfull) break;
  }
  FinTopSpace qspace(q, std::move(qopens));
  ContMap qmap{space, qspace, std::move(qtable)};
  if (!is_continuous(qmap) || !is_quotient_map(qmap)) {
    throw InternalContradiction("quotient construction not a quotient map");
  }
  return Quotient{std::move(qspace), std::move(qmap), std::move(class_of)};
}

bool is_quotient_map(const ContMap& q) {
  if (q.image(q.source.full()) != q.target.full()) return false;
  PointSet qfull = q.target.full();
  for (PointSet v = 0;; ++v) {
    bool open_pre = q.source.is_open(q.preimage(v));
    if (open_pre != q.target.is_open(v)) return false;
    if (v == qfull) break;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Close a family (plus {} and X) under pairwise union and intersection.
std::vector<PointSet> close_family(std::vector<PointSet> fam, PointSet full) {
  std::set<PointSet> s(fam.begin(), fam.end());
  s.insert(0);
  s.insert(full);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<PointSet> cur(s.begin(), s.end());
    for (PointSet u : cur) {
      for (PointSet v : cur) {
        if (s.insert(u | v).second) changed = true;
        if (s.insert(u & v).second) changed = true;
      }
    }
  }
  return {s.begin(), s.end()};
}

bool is_topology_family(const std::vector<PointSet>& fam, PointSet full) {
  std::set<PointSet> s(fam.begin(), fam.end());
  if (!s.count(0) || !s.count(full)) return false;
  for (PointSet u : fam) {
    for (PointSet v : fam) {
      if (!s.count(u | v) || !s.count(u & v)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<FinTopSpace> enumerate_topologies(int n_points,
                                              std::optional<int> sample_count,
                                              std::uint64_t seed) {
  if (n_points < 0) throw ShapeMismatch("negative point count");
  if (n_points > kExhaustiveTopologyBound) {
    if (n_points != 5 || !sample_count) {
      throw BoundExceeded(
          "exhaustive enumeration is bounded at 4 points; 5 points requires "
          "an explicit sample count");
    }
    std::mt19937_64 rng(seed);
    std::vector<FinTopSpace> out;
    PointSet full = (PointSet{1} << n_points) - 1;
    std::set<std::vector<PointSet>> seen;
    while (static_cast<int>(out.size()) < *sample_count) {
      std::vector<PointSet> seedfam;
      int k = static_cast<int>(rng() % 6);
      for (int i = 0; i < k; ++i) {
        seedfam.push_back(static_cast<PointSet>(rng()) & full);
      }
      auto fam = close_family(std::move(seedfam), full);
      if (seen.insert(fam).second) out.emplace_back(n_points, fam);
    }
    return out;
  }

  PointSet full = n_points == 0 ? 0 : (PointSet{1} << n_points) - 1;
  std::vector<PointSet> proper;  // candidate opens besides {} and X
  for (PointSet m = 1; m < full; ++m) proper.push_back(m);
  std::vector<FinTopSpace> out;
  const std::uint32_t families = 1u << proper.size();
  for (std::uint32_t pick = 0; pick < families; ++pick) {
    std::vector<PointSet> fam = {0, full};
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if (pick & (1u << i)) fam.push_back(proper[i]);
    }
    if (is_topology_family(fam, full)) out.emplace_back(n_points, fam);
  }
  return out;
}

bool homeomorphic(const FinTopSpace& x, const FinTopSpace& y) {
  if (x.n_points() != y.n_points()) return false;
  if (x.opens().size() != y.opens().size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(x.n_points()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (PointSet u : x.opens()) {
      PointSet v = 0;
      for (int i = 0; i < x.n_points(); ++i) {
        if (u & (PointSet{1} << i)) v |= PointSet{1} << perm[i];
      }
      if (!y.is_open(v)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return x.n_points() == 0;
}

std::vector<FinTopSpace> up_to_homeomorphism(
    const std::vector<FinTopSpace>& xs) {
  std::vector<FinTopSpace> reps;
  for (const FinTopSpace& x : xs) {
    bool fresh = true;
    for (const FinTopSpace& r : reps) {
      if (homeomorphic(x, r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(x);
  }
  return reps;
}

}  // namespace finduality
