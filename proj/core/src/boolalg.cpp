#include "finduality/boolalg.hpp"

#include <algorithm>
#include <bit>

namespace finduality {

FinBoolAlg::FinBoolAlg(int n_atoms, int atom_bound) : n_atoms_(n_atoms) {
  if (n_atoms < 0) {
    throw ShapeMismatch("n_atoms must be non-negative");
  }
  if (n_atoms > atom_bound) {
    throw BoundExceeded("n_atoms " + std::to_string(n_atoms) +
                        " exceeds the configured bound " +
                        std::to_string(atom_bound));
  }
  labels_.resize(size());
}

Elem FinBoolAlg::atom(int i) const {
  if (i < 0 || i >= n_atoms_) {
    throw ShapeMismatch("atom index out of range");
  }
  return Elem{1} << i;
}

Elem FinBoolAlg::sup(const std::vector<Elem>& xs) const {
  Elem acc = zero();
  for (Elem x : xs) acc |= x;
  return acc;
}

Elem FinBoolAlg::inf(const std::vector<Elem>& xs) const {
  Elem acc = one();
  for (Elem x : xs) acc &= x;
  return acc;
}

void FinBoolAlg::set_label(Elem a, std::string label) {
  labels_.at(a) = std::move(label);
}

std::string FinBoolAlg::label(Elem a) const {
  if (!labels_.at(a).empty()) return labels_[a];
  if (a == zero()) return "0";
  if (a == one()) return "1";
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n_atoms_; ++i) {
    if (a & (Elem{1} << i)) {
      if (!first) out += ",";
      out += "a" + std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

HomCheck check_hom(const FinBoolAlg& src, const FinBoolAlg& tgt,
                   const std::vector<Elem>& table) {
  if (table.size() != src.size()) {
    throw ShapeMismatch("hom table must be total on the source universe");
  }
  for (Elem v : table) {
    if (!tgt.is_element(v)) {
      throw ShapeMismatch("hom table value outside the target universe");
    }
  }

  HomCheck out;
  auto fail = [&](std::string why) {
    out.failure = std::move(why);
    return out;
  };

  if (table[src.zero()] != tgt.zero()) return fail("0 not preserved");
  if (table[src.one()] != tgt.one()) return fail("1 not preserved");
  for (Elem a = 0; a < src.size(); ++a) {
    if (table[src.complement(a)] != tgt.complement(table[a])) {
      return fail("complement broken at " + src.label(a));
    }
    for (Elem b = a; b < src.size(); ++b) {
      if (table[src.meet(a, b)] != tgt.meet(table[a], table[b])) {
        return fail("meet broken at (" + src.label(a) + ", " + src.label(b) + ")");
      }
      if (table[src.join(a, b)] != tgt.join(table[a], table[b])) {
        return fail("join broken at (" + src.label(a) + ", " + src.label(b) + ")");
      }
    }
  }
  out.is_hom = true;

  // Atom images partition the target's atoms, so each target atom lies under
  // the image of exactly one source atom; that assignment is the point map.
  std::vector<int> pm(static_cast<std::size_t>(tgt.n_atoms()), -1);
  for (int j = 0; j < tgt.n_atoms(); ++j) {
    for (int i = 0; i < src.n_atoms(); ++i) {
      if (tgt.leq(tgt.atom(j), table[src.atom(i)])) {
        if (pm[j] != -1) throw InternalContradiction("atom images overlap");
        pm[j] = i;
      }
    }
    if (pm[j] == -1) throw InternalContradiction("atom images do not cover");
  }
  for (Elem a = 0; a < src.size(); ++a) {
    Elem preim = tgt.zero();
    for (int j = 0; j < tgt.n_atoms(); ++j) {
      if (a & (Elem{1} << pm[j])) preim |= tgt.atom(j);
    }
    if (preim != table[a]) {
      throw InternalContradiction("point map does not reproduce the table");
    }
  }
  out.point_map = pm;

  // Sup-preservation. Every sup in a finite algebra is a finite join, so
  // binary join preservation already settles it; for small sources we still
  // sweep every element family literally.
  out.preserves_all_suprema = true;
  if (src.size() <= 16) {
    const std::uint32_t families = 1u << src.size();
    for (std::uint32_t fam = 0; fam < families; ++fam) {
      Elem s = src.zero(), hs = tgt.zero();
      for (Elem e = 0; e < src.size(); ++e) {
        if (fam & (1u << e)) {
          s = src.join(s, e);
          hs = tgt.join(hs, table[e]);
        }
      }
      if (table[s] != hs) {
        out.preserves_all_suprema = false;
        out.failure = "sup broken on a family";
        break;
      }
    }
  }
  return out;
}

BoolHom BoolHom::from_table(const FinBoolAlg& src, const FinBoolAlg& tgt,
                            const std::vector<Elem>& table) {
  HomCheck c = check_hom(src, tgt, table);
  if (!c.is_hom) {
    throw ShapeMismatch("table is not a Boolean homomorphism: " + c.failure);
  }
  return BoolHom{src, tgt, table, *c.point_map};
}

BoolHom BoolHom::from_point_map(const FinBoolAlg& src, const FinBoolAlg& tgt,
                                const std::vector<int>& point_map) {
  if (point_map.size() != static_cast<std::size_t>(tgt.n_atoms())) {
    throw ShapeMismatch("point map must be total on the target's atoms");
  }
  std::vector<Elem> table(src.size());
  for (Elem a = 0; a < src.size(); ++a) {
    Elem v = tgt.zero();
    for (int j = 0; j < tgt.n_atoms(); ++j) {
      int i = point_map[j];
      if (i < 0 || i >= src.n_atoms()) {
        throw ShapeMismatch("point map value outside the source's atoms");
      }
      if (a & (Elem{1} << i)) v |= tgt.atom(j);
    }
    table[a] = v;
  }
  return BoolHom{src, tgt, std::move(table), point_map};
}

BoolHom BoolHom::identity(const FinBoolAlg& alg) {
  std::vector<Elem> table(alg.size());
  for (Elem a = 0; a < alg.size(); ++a) table[a] = a;
  std::vector<int> pm(static_cast<std::size_t>(alg.n_atoms()));
  for (int i = 0; i < alg.n_atoms(); ++i) pm[i] = i;
  return BoolHom{alg, alg, std::move(table), std::move(pm)};
}

bool operator==(const BoolHom& f, const BoolHom& g) {
  return f.source == g.source && f.target == g.target && f.table == g.table;
}

BoolHom compose(const BoolHom& g, const BoolHom& f) {
  if (!(f.target == g.source)) {
    throw NotComposable("hom targets/sources do not match");
  }
  std::vector<Elem> table(f.source.size());
  for (Elem a = 0; a < f.source.size(); ++a) table[a] = g.table[f.table[a]];
  // Point maps compose the other way round.
  std::vector<int> pm(g.point_map.size());
  for (std::size_t j = 0; j < pm.size(); ++j) pm[j] = f.point_map[g.point_map[j]];
  return BoolHom{f.source, g.target, std::move(table), std::move(pm)};
}

std::vector<BoolHom> all_homs(const FinBoolAlg& src, const FinBoolAlg& tgt) {
  std::vector<BoolHom> out;
  const int m = src.n_atoms(), n = tgt.n_atoms();
  if (n == 0) {
    out.push_back(BoolHom::from_point_map(src, tgt, {}));
    return out;
  }
  if (m == 0) return out;  // 0=1 cannot map to a nondegenerate algebra
  std::vector<int> pm(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(BoolHom::from_point_map(src, tgt, pm));
    int j = 0;
    while (j < n && ++pm[j] == m) pm[j++] = 0;
    if (j == n) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Ultrafilter> ultrafilters(const FinBoolAlg& alg) {
  std::vector<Ultrafilter> out;
  for (int i = 0; i < alg.n_atoms(); ++i) {
    ElemSet carrier = 0;
    for (Elem e = 0; e < alg.size(); ++e) {
      if (alg.leq(alg.atom(i), e)) carrier |= ElemSet{1} << e;
    }
    out.push_back(Ultrafilter{i, carrier});
  }
  return out;
}

bool is_filter_set(const FinBoolAlg& alg, ElemSet s) {
  if (s == 0) return false;
  if (s & 1) return false;  // proper: excludes 0
  if (alg.size() == 1) return false;
  if (!(s & (ElemSet{1} << alg.one()))) return false;
  for (Elem a = 0; a < alg.size(); ++a) {
    if (!(s & (ElemSet{1} << a))) continue;
    for (Elem b = 0; b < alg.size(); ++b) {
      if (alg.leq(a, b) && !(s & (ElemSet{1} << b))) return false;  // upward
      if ((s & (ElemSet{1} << b)) && !(s & (ElemSet{1} << alg.meet(a, b)))) {
        return false;  // meet closed
      }
    }
  }
  return true;
}

bool is_ultrafilter_set(const FinBoolAlg& alg, ElemSet s) {
  if (!is_filter_set(alg, s)) return false;
  // Maximal proper filter: for every element, it or its complement is in.
  for (Elem a = 0; a < alg.size(); ++a) {
    bool in = s & (ElemSet{1} << a);
    bool cin = s & (ElemSet{1} << alg.complement(a));
    if (in == cin) return false;
  }
  return true;
}

FilterResult filter_ops(const FinBoolAlg& alg, const std::vector<Elem>& gens) {
  for (Elem g : gens) {
    if (!alg.is_element(g)) throw ShapeMismatch("generator outside the universe");
  }
  FilterResult out;
  Elem bottom = alg.inf(gens);
  if (bottom == alg.zero()) return out;  // Improper (covers the 0=1 algebra)
  out.proper = true;
  for (Elem e = 0; e < alg.size(); ++e) {
    if (alg.leq(bottom, e)) out.carrier |= ElemSet{1} << e;
  }
  out.is_filter = is_filter_set(alg, out.carrier);
  out.is_ultrafilter = is_ultrafilter_set(alg, out.carrier);
  if (alg.is_atom(bottom)) {
    out.principal_atom = std::countr_zero(bottom);
  }
  return out;
}

ElemSet elemset_of_carrier(const FinBoolAlg& alg, const std::vector<Elem>& xs) {
  ElemSet s = 0;
  for (Elem x : xs) {
    if (!alg.is_element(x)) throw ShapeMismatch("element outside the universe");
    s |= ElemSet{1} << x;
  }
  return s;
}

std::vector<Elem> carrier_of_elemset(const FinBoolAlg& alg, ElemSet s) {
  std::vector<Elem> out;
  for (Elem e = 0; e < alg.size(); ++e) {
    if (s & (ElemSet{1} << e)) out.push_back(e);
  }
  return out;
}

}  // namespace finduality
