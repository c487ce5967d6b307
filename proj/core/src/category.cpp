#include "finduality/category.hpp"

#include <algorithm>
#include <sstream>

namespace finduality {

int FinCategory::compose(int g, int f) const {
  int gf = comp.at(g).at(f);
  if (gf < 0) {
    throw NotComposable("cannot compose " + morphisms[g].name + " after " +
                        morphisms[f].name);
  }
  return gf;
}

int FinCategory::object_index(const std::string& n) const {
  for (int i = 0; i < n_objects(); ++i) {
    if (objects[i] == n) return i;
  }
  return -1;
}

int FinCategory::morphism_index(const std::string& n) const {
  for (int i = 0; i < n_morphisms(); ++i) {
    if (morphisms[i].name == n) return i;
  }
  return -1;
}

std::vector<int> FinCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < n_morphisms(); ++m) {
    if (morphisms[m].dom == x && morphisms[m].cod == y) out.push_back(m);
  }
  return out;
}

std::optional<int> FinCategory::inverse(int m) const {
  for (int n : hom(cod(m), dom(m))) {
    if (comp[n][m] == identity(dom(m)) && comp[m][n] == identity(cod(m))) {
      return n;
    }
  }
  return std::nullopt;
}

bool FinCategory::is_iso(int m) const { return inverse(m).has_value(); }

CategoryCheck validate_category(const FinCategory& c) {
  auto fail = [](std::string why) { return CategoryCheck{false, std::move(why)}; };
  const int no = c.n_objects(), nm = c.n_morphisms();
  if (static_cast<int>(c.id_of.size()) != no) return fail("id table size");
  if (static_cast<int>(c.comp.size()) != nm) return fail("comp table rows");
  for (const auto& row : c.comp) {
    if (static_cast<int>(row.size()) != nm) return fail("comp table columns");
  }
  for (const MorData& m : c.morphisms) {
    if (m.dom < 0 || m.dom >= no || m.cod < 0 || m.cod >= no) {
      return fail("morphism " + m.name + " has a dangling endpoint");
    }
  }
  for (int x = 0; x < no; ++x) {
    int i = c.id_of[x];
    if (i < 0 || i >= nm || c.dom(i) != x || c.cod(i) != x) {
      return fail("bad identity on " + c.objects[x]);
    }
  }
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      int gf = c.comp[g][f];
      bool composable = c.cod(f) == c.dom(g);
      if (!composable) {
        if (gf != -1) return fail("composite defined on a non-composable pair");
        continue;
      }
      if (gf < 0 || gf >= nm) {
        return fail("missing composite " + c.morphisms[g].name + " after " +
                    c.morphisms[f].name);
      }
      if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g)) {
        return fail("composite endpoints wrong for " + c.morphisms[g].name +
                    " after " + c.morphisms[f].name);
      }
    }
  }
  for (int f = 0; f < nm; ++f) {
    if (c.comp[f][c.id_of[c.dom(f)]] != f || c.comp[c.id_of[c.cod(f)]][f] != f) {
      return fail("identity law fails at " + c.morphisms[f].name);
    }
  }
  for (int h = 0; h < nm; ++h) {
    for (int g = 0; g < nm; ++g) {
      if (c.cod(g) != c.dom(h)) continue;
      for (int f = 0; f < nm; ++f) {
        if (c.cod(f) != c.dom(g)) continue;
        if (c.comp[c.comp[h][g]][f] != c.comp[h][c.comp[g][f]]) {
          return fail("associativity fails at (" + c.morphisms[h].name + ", " +
                      c.morphisms[g].name + ", " + c.morphisms[f].name + ")");
        }
      }
    }
  }
  return CategoryCheck{true, ""};
}

FinCategory opposite(const FinCategory& c) {
  FinCategory op = c;
  op.name = c.name + "^op";
  for (MorData& m : op.morphisms) std::swap(m.dom, m.cod);
  for (int g = 0; g < c.n_morphisms(); ++g) {
    for (int f = 0; f < c.n_morphisms(); ++f) {
      op.comp[g][f] = c.comp[f][g];
    }
  }
  return op;
}

FullSubcat full_subcategory(const FinCategory& host,
                            const std::vector<int>& object_indices) {
  FullSubcat out;
  out.cat.name = host.name + "|sub";
  std::vector<int> host_obj_to_sub(host.n_objects(), -1);
  for (int o : object_indices) {
    if (o < 0 || o >= host.n_objects()) {
      throw ShapeMismatch("subcategory object outside the host");
    }
    host_obj_to_sub[o] = static_cast<int>(out.cat.objects.size());
    out.cat.objects.push_back(host.objects[o]);
    out.obj_to_host.push_back(o);
  }
  out.host_mor_to_sub.assign(host.n_morphisms(), -1);
  for (int m = 0; m < host.n_morphisms(); ++m) {
    int d = host_obj_to_sub[host.dom(m)], cd = host_obj_to_sub[host.cod(m)];
    if (d < 0 || cd < 0) continue;
    out.host_mor_to_sub[m] = static_cast<int>(out.cat.morphisms.size());
    out.cat.morphisms.push_back({host.morphisms[m].name, d, cd});
    out.mor_to_host.push_back(m);
  }
  const int nm = out.cat.n_morphisms();
  out.cat.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      if (out.cat.cod(f) != out.cat.dom(g)) continue;
      int gf = host.comp[out.mor_to_host[g]][out.mor_to_host[f]];
      out.cat.comp[g][f] = out.host_mor_to_sub[gf];
    }
  }
  out.cat.id_of.resize(out.cat.n_objects());
  for (int o = 0; o < out.cat.n_objects(); ++o) {
    out.cat.id_of[o] = out.host_mor_to_sub[host.id_of[out.obj_to_host[o]]];
  }
  CategoryCheck ck = validate_category(out.cat);
  if (!ck.ok) throw InternalContradiction("full subcategory broke: " + ck.failure);
  return out;
}

// ---------------------------------------------------------------------------

CategoryCheck validate_functor(const FinCategory& src, const FinCategory& tgt,
                               const Functor& f) {
  auto fail = [&](std::string why) {
    return CategoryCheck{false, f.name + ": " + std::move(why)};
  };
  if (static_cast<int>(f.obj_map.size()) != src.n_objects() ||
      static_cast<int>(f.mor_map.size()) != src.n_morphisms()) {
    return fail("map sizes do not match the source");
  }
  for (int o : f.obj_map) {
    if (o < 0 || o >= tgt.n_objects()) return fail("object image out of range");
  }
  for (int m = 0; m < src.n_morphisms(); ++m) {
    int fm = f.mor_map[m];
    if (fm < 0 || fm >= tgt.n_morphisms()) {
      return fail("morphism image out of range");
    }
    int want_dom = f.obj_map[f.contravariant ? src.cod(m) : src.dom(m)];
    int want_cod = f.obj_map[f.contravariant ? src.dom(m) : src.cod(m)];
    if (tgt.dom(fm) != want_dom || tgt.cod(fm) != want_cod) {
      return fail("endpoints wrong at " + src.morphisms[m].name);
    }
  }
  for (int x = 0; x < src.n_objects(); ++x) {
    if (f.mor_map[src.id_of[x]] != tgt.id_of[f.obj_map[x]]) {
      return fail("identity not preserved at " + src.objects[x]);
    }
  }
  for (int g = 0; g < src.n_morphisms(); ++g) {
    for (int h = 0; h < src.n_morphisms(); ++h) {
      if (src.cod(h) != src.dom(g)) continue;
      int gh = src.comp[g][h];
      int img = f.contravariant ? tgt.comp[f.mor_map[h]][f.mor_map[g]]
                                : tgt.comp[f.mor_map[g]][f.mor_map[h]];
      if (img != f.mor_map[gh]) {
        return fail("composition not preserved at (" + src.morphisms[g].name +
                    ", " + src.morphisms[h].name + ")");
      }
    }
  }
  return CategoryCheck{true, ""};
}

Functor identity_functor(const FinCategory& c) {
  Functor f;
  f.name = "Id_" + c.name;
  f.obj_map.resize(c.n_objects());
  f.mor_map.resize(c.n_morphisms());
  for (int i = 0; i < c.n_objects(); ++i) f.obj_map[i] = i;
  for (int i = 0; i < c.n_morphisms(); ++i) f.mor_map[i] = i;
  return f;
}

Functor compose_functors(const FinCategory& mid, const Functor& g,
                         const Functor& f) {
  if (static_cast<int>(g.obj_map.size()) != mid.n_objects() ||
      static_cast<int>(g.mor_map.size()) != mid.n_morphisms()) {
    throw ShapeMismatch("outer functor does not start at the middle category");
  }
  Functor out;
  out.name = g.name + "." + f.name;
  out.contravariant = f.contravariant != g.contravariant;
  out.obj_map.reserve(f.obj_map.size());
  out.mor_map.reserve(f.mor_map.size());
  for (int o : f.obj_map) out.obj_map.push_back(g.obj_map.at(o));
  for (int m : f.mor_map) out.mor_map.push_back(g.mor_map.at(m));
  return out;
}

bool functor_eq(const Functor& f, const Functor& g) {
  return f.contravariant == g.contravariant && f.obj_map == g.obj_map &&
         f.mor_map == g.mor_map;
}

CategoryCheck validate_nattrans(const FinCategory& src, const FinCategory& tgt,
                                const Functor& f, const Functor& g,
                                const NatTrans& eta) {
  auto fail = [&](std::string why) {
    return CategoryCheck{false, eta.name + ": " + std::move(why)};
  };
  if (f.contravariant != g.contravariant) return fail("variance mismatch");
  if (static_cast<int>(eta.components.size()) != src.n_objects()) {
    return fail("one component per source object required");
  }
  for (int x = 0; x < src.n_objects(); ++x) {
    int cx = eta.components[x];
    if (cx < 0 || cx >= tgt.n_morphisms()) return fail("component out of range");
    if (tgt.dom(cx) != f.obj_map[x] || tgt.cod(cx) != g.obj_map[x]) {
      return fail("component endpoints wrong at " + src.objects[x]);
    }
  }
  for (int m = 0; m < src.n_morphisms(); ++m) {
    int x = src.dom(m), y = src.cod(m);
    int lhs, rhs;
    if (!f.contravariant) {
      lhs = tgt.comp[eta.components[y]][f.mor_map[m]];
      rhs = tgt.comp[g.mor_map[m]][eta.components[x]];
    } else {
      lhs = tgt.comp[eta.components[x]][f.mor_map[m]];
      rhs = tgt.comp[g.mor_map[m]][eta.components[y]];
    }
    if (lhs != rhs || lhs < 0) {
      return fail("naturality fails at " + src.morphisms[m].name);
    }
  }
  return CategoryCheck{true, ""};
}

bool is_nat_iso(const FinCategory& tgt, const NatTrans& eta) {
  return std::all_of(eta.components.begin(), eta.components.end(),
                     [&](int c) { return tgt.is_iso(c); });
}

// ---------------------------------------------------------------------------
// Builders

CategoryBuilder::CategoryBuilder(std::string name) { cat_.name = std::move(name); }

int CategoryBuilder::add_object(const std::string& n) {
  if (cat_.object_index(n) != -1) throw ShapeMismatch("duplicate object " + n);
  cat_.objects.push_back(n);
  int obj = cat_.n_objects() - 1;
  cat_.morphisms.push_back({"id_" + n, obj, obj});
  cat_.id_of.push_back(cat_.n_morphisms() - 1);
  return obj;
}

int CategoryBuilder::add_morphism(const std::string& n, int dom, int cod) {
  if (cat_.morphism_index(n) != -1) throw ShapeMismatch("duplicate morphism " + n);
  cat_.morphisms.push_back({n, dom, cod});
  return cat_.n_morphisms() - 1;
}

void CategoryBuilder::set_compose(int g, int f, int gf) {
  int nm = cat_.n_morphisms();
  if (static_cast<int>(cat_.comp.size()) != nm) {
    cat_.comp.resize(nm);
    for (auto& row : cat_.comp) row.resize(nm, -1);
  }
  if (cat_.cod(f) != cat_.dom(g)) {
    throw NotComposable("declared composite on a non-composable pair");
  }
  cat_.comp[g][f] = gf;
}

FinCategory CategoryBuilder::build() {
  int nm = cat_.n_morphisms();
  cat_.comp.resize(nm);
  for (auto& row : cat_.comp) row.resize(nm, -1);
  for (int f = 0; f < nm; ++f) {
    cat_.comp[f][cat_.id_of[cat_.dom(f)]] = f;
    cat_.comp[cat_.id_of[cat_.cod(f)]][f] = f;
  }
  CategoryCheck ck = validate_category(cat_);
  if (!ck.ok) throw LawViolation("category build failed: " + ck.failure);
  return cat_;
}

FinSetCategory finset_category(const std::vector<int>& sizes,
                               const std::string& name) {
  FinSetCategory out;
  out.sizes = sizes;
  out.cat.name = name;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) throw ShapeMismatch("negative set size");
    out.cat.objects.push_back("X" + std::to_string(i));
  }
  for (int x = 0; x < out.cat.n_objects(); ++x) {
    for (int y = 0; y < out.cat.n_objects(); ++y) {
      if (sizes[x] > 0 && sizes[y] == 0) continue;  // no maps into empty
      std::vector<int> tbl(static_cast<std::size_t>(sizes[x]), 0);
      while (true) {
        std::string n = "f" + std::to_string(x) + std::to_string(y);
        for (int v : tbl) n += "_" + std::to_string(v);
        out.cat.morphisms.push_back({n, x, y});
        out.tables.push_back(tbl);
        int j = 0;
        while (j < sizes[x] && ++tbl[j] == sizes[y]) tbl[j++] = 0;
        if (j == sizes[x]) break;  // covers the empty map when sizes[x] == 0
      }
    }
  }
  const int nm = out.cat.n_morphisms();
  out.cat.id_of.assign(out.cat.n_objects(), -1);
  for (int m = 0; m < nm; ++m) {
    int x = out.cat.dom(m);
    if (out.cat.cod(m) != x) continue;
    bool is_id = true;
    for (int p = 0; p < out.sizes[x]; ++p) {
      if (out.tables[m][p] != p) is_id = false;
    }
    if (is_id) {
      out.cat.id_of[x] = m;
      out.cat.morphisms[m].name = "id_X" + std::to_string(x);
    }
  }
  out.cat.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      if (out.cat.cod(f) != out.cat.dom(g)) continue;
      std::vector<int> tbl(out.tables[f].size());
      for (std::size_t p = 0; p < tbl.size(); ++p) {
        tbl[p] = out.tables[g][out.tables[f][p]];
      }
      for (int h = 0; h < nm; ++h) {
        if (out.cat.dom(h) == out.cat.dom(f) && out.cat.cod(h) == out.cat.cod(g) &&
            out.tables[h] == tbl) {
          out.cat.comp[g][f] = h;
          break;
        }
      }
    }
  }
  CategoryCheck ck = validate_category(out.cat);
  if (!ck.ok) throw InternalContradiction("finset category broke: " + ck.failure);
  return out;
}

// ---------------------------------------------------------------------------
// Fixture text format

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

}  // namespace

Fixture parse_fixture(const std::string& text) {
  Fixture fx;
  CategoryBuilder builder("host");
  struct PendingComp {
    std::string g, f, gf;
  };
  std::vector<PendingComp> comps;
  std::vector<std::string> subs, covers;
  std::vector<std::pair<std::string, std::string>> pis;
  std::vector<std::string> obj_names;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& why) {
    throw ShapeMismatch("fixture line " + std::to_string(lineno) + ": " + why);
  };
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> mors;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "fixture" && toks.size() == 2) {
      fx.name = toks[1];
    } else if (kw == "object" && toks.size() == 2) {
      obj_names.push_back(toks[1]);
    } else if (kw == "morphism" && toks.size() == 6 && toks[2] == ":" &&
               toks[4] == "->") {
      mors.push_back({toks[1], {toks[3], toks[5]}});
    } else if (kw == "compose" && toks.size() == 6 && toks[2] == "." &&
               toks[4] == "=") {
      comps.push_back({toks[1], toks[3], toks[5]});
    } else if (kw == "sub" && toks.size() == 2) {
      subs.push_back(toks[1]);
    } else if (kw == "cover" && toks.size() == 2) {
      covers.push_back(toks[1]);
    } else if (kw == "pi" && toks.size() == 4 && toks[2] == "=") {
      pis.push_back({toks[1], toks[3]});
    } else {
      bad("unrecognized directive '" + line + "'");
    }
  }

  for (const auto& n : obj_names) builder.add_object(n);
  for (const auto& [n, dc] : mors) {
    int d = -1, c = -1;
    for (std::size_t i = 0; i < obj_names.size(); ++i) {
      if (obj_names[i] == dc.first) d = static_cast<int>(i);
      if (obj_names[i] == dc.second) c = static_cast<int>(i);
    }
    if (d < 0 || c < 0) {
      throw ShapeMismatch("fixture morphism " + n + " names unknown objects");
    }
    builder.add_morphism(n, d, c);
  }
  // Deterministic builder layout: object k's identity is morphism index k,
  // declared morphism j is index |objects| + j.
  auto resolve = [&](const std::string& n) -> int {
    for (std::size_t i = 0; i < obj_names.size(); ++i) {
      if (n == "id_" + obj_names[i]) return static_cast<int>(i);
    }
    for (std::size_t j = 0; j < mors.size(); ++j) {
      if (mors[j].first == n) {
        return static_cast<int>(obj_names.size() + j);
      }
    }
    throw ShapeMismatch("fixture names unknown morphism " + n);
  };
  for (const auto& pc : comps) {
    builder.set_compose(resolve(pc.g), resolve(pc.f), resolve(pc.gf));
  }
  fx.host = builder.build();

  for (const auto& s : subs) {
    int o = fx.host.object_index(s);
    if (o < 0) throw ShapeMismatch("fixture sub names unknown object " + s);
    fx.sub_objects.push_back(o);
  }
  for (const auto& cv : covers) fx.covering.push_back(resolve(cv));
  if (!pis.empty()) {
    std::vector<int> chosen(fx.host.n_objects(), -1);
    for (const auto& [obj, mor] : pis) {
      int o = fx.host.object_index(obj);
      if (o < 0) throw ShapeMismatch("fixture pi names unknown object " + obj);
      chosen[o] = resolve(mor);
    }
    fx.chosen_pi = chosen;
  }
  if (fx.sub_objects.empty()) {
    throw ShapeMismatch("fixture declares no subcategory objects");
  }
  return fx;
}

std::string serialize_fixture(const Fixture& fx) {
  std::ostringstream out;
  out << "fixture " << fx.name << "\n";
  for (const auto& o : fx.host.objects) out << "object " << o << "\n";
  std::vector<bool> is_id(fx.host.n_morphisms(), false);
  for (int i : fx.host.id_of) is_id[i] = true;
  for (int m = 0; m < fx.host.n_morphisms(); ++m) {
    if (is_id[m]) continue;
    out << "morphism " << fx.host.morphisms[m].name << " : "
        << fx.host.objects[fx.host.dom(m)] << " -> "
        << fx.host.objects[fx.host.cod(m)] << "\n";
  }
  for (int g = 0; g < fx.host.n_morphisms(); ++g) {
    for (int f = 0; f < fx.host.n_morphisms(); ++f) {
      if (is_id[g] || is_id[f]) continue;
      int gf = fx.host.comp[g][f];
      if (gf < 0) continue;
      out << "compose " << fx.host.morphisms[g].name << " . "
          << fx.host.morphisms[f].name << " = " << fx.host.morphisms[gf].name
          << "\n";
    }
  }
  for (int o : fx.sub_objects) out << "sub " << fx.host.objects[o] << "\n";
  for (int m : fx.covering) out << "cover " << fx.host.morphisms[m].name << "\n";
  if (fx.chosen_pi) {
    for (int o = 0; o < fx.host.n_objects(); ++o) {
      int m = (*fx.chosen_pi)[o];
      if (m >= 0) {
        out << "pi " << fx.host.objects[o] << " = " << fx.host.morphisms[m].name
            << "\n";
      }
    }
  }
  return out.str();
}

Fixture builtin_fixture(const std::string& name) {
  if (name == "syncat1") {
    return parse_fixture(R"(fixture syncat1
object B1
object C0
morphism p0 : B1 -> C0
morphism e : C0 -> C0
compose e . e = e
compose e . p0 = p0
sub B1
cover id_B1
cover p0
)");
  }
  if (name == "syncat2") {
    return parse_fixture(R"(fixture syncat2
object B1
object C0
morphism p0 : B1 -> C0
morphism p0b : B1 -> C0
morphism e : C0 -> C0
compose e . e = e
compose e . p0 = p0b
compose e . p0b = p0b
sub B1
cover id_B1
cover p0
cover p0b
)");
  }
  if (name == "topcat") {
    FinSetCategory fs = finset_category({0, 1, 2}, "topcat-host");
    Fixture fx;
    fx.name = "topcat";
    fx.host = fs.cat;
    for (int o = 0; o < fx.host.n_objects(); ++o) fx.sub_objects.push_back(o);
    for (int m = 0; m < fx.host.n_morphisms(); ++m) {
      if (fx.host.is_iso(m)) fx.covering.push_back(m);
    }
    fx.chosen_pi = fx.host.id_of;
    return fx;
  }
  throw ShapeMismatch("unknown builtin fixture " + name);
}

}  // namespace finduality
