#include "finduality/fedbridge.hpp"

#include <algorithm>

#include "finduality/errors.hpp"

namespace finduality {

namespace {

// s_A(a) as a point set of the Stone space: the principal ultrafilter at
// atom i contains a exactly when bit i of a is set, so the mask is a itself.
PointSet stone_s(Elem a) { return a; }

std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> class_of(n, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      out.push_back(class_of);
      return;
    }
    for (int c = 0; c <= used; ++c) {
      class_of[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0)
    out.push_back({});
  else
    rec(rec, 0, 0);
  return out;
}

}  // namespace

Cover make_cover(const FinBoolAlg& a, const ContMap& pi) {
  if (!(pi.source == stone_space(a)))
    throw ShapeMismatch("cover domain is not the Stone space of the algebra");
  if (!is_continuous(pi)) throw ShapeMismatch("cover map not continuous");
  MapFlags flags = map_predicates(pi);
  Cover d{a, pi};
  d.surjective = pi.image(pi.source.full()) == pi.target.full();
  d.closed_map = flags.closed_map;
  d.irreducible = flags.irreducible;
  d.hausdorff_codomain = pi.target.is_discrete();
  return d;
}

ContactRelation contact_of_cover(const Cover& d) {
  if (!d.in_p())
    throw PreconditionFailed("contact_of_cover: pi must be closed irreducible");
  const FinBoolAlg& a = d.algebra;
  std::vector<std::uint32_t> kernel(a.n_atoms(), 0);
  for (int i = 0; i < a.n_atoms(); ++i)
    for (int j = 0; j < a.n_atoms(); ++j)
      if (d.pi(i) == d.pi(j)) kernel[i] |= 1u << j;
  ContactRelation c = kernel_to_contact(a, kernel);

  // cross-check the additive kernel against the set form and against the
  // ultrafilter form (u, v principal, pi(u) = pi(v))
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      bool set_form =
          (d.pi.image(stone_s(x)) & d.pi.image(stone_s(y))) != 0;
      bool ult_form = false;
      for (int i = 0; i < a.n_atoms() && !ult_form; ++i)
        for (int j = 0; j < a.n_atoms(); ++j)
          if (a.leq(a.atom(i), x) && a.leq(a.atom(j), y) &&
              d.pi(i) == d.pi(j)) {
            ult_form = true;
            break;
          }
      if (set_form != ult_form || c.contact(x, y) != set_form)
        throw InternalContradiction("C_D forms disagree");
    }
  }

  if (d.hausdorff_codomain &&
      !check_axioms(a, c.table()).is_nca)
    throw InternalContradiction("C_D not normal over a Hausdorff codomain");
  return c;
}

Cover cover_of_contact(const ContactRelation& c) {
  ContactAxioms ax = check_axioms(c.algebra, c.table());
  if (!ax.is_nca) throw NotNormal("cover_of_contact: NCA required");
  UltrafilterRelation r = r_relation(c);
  if (!r.is_equivalence())
    throw InternalContradiction("R_(A,C) of an NCA is not an equivalence");
  FinTopSpace ta = stone_space(c.algebra);
  std::vector<PointSet> rows(r.rows.begin(), r.rows.end());
  Quotient q = quotient_space(ta, rows);
  Cover d = make_cover(c.algebra, q.map);
  if (!d.irreducible || !d.hausdorff_codomain)
    throw InternalContradiction("natural quotient of an NCA is not in P");
  return d;
}

NcrelIrelReport ncrel_irel_check(const FinBoolAlg& a) {
  if (a.n_atoms() > 4)
    throw BoundExceeded("ncrel_irel_check capped at 4 atoms");
  NcrelIrelReport report;
  for (const auto& kernel : all_kernels(a)) {
    ContactRelation c = kernel_to_contact(a, kernel);
    if (check_axioms(a, c.table()).is_nca) report.ncrel.push_back(c);
  }
  FinTopSpace ta = stone_space(a);
  for (const auto& classes : set_partitions(a.n_atoms())) {
    std::vector<PointSet> rows = relation_from_classes(a.n_atoms(), classes);
    Quotient q = quotient_space(ta, rows);
    if (map_predicates(q.map).irreducible) report.irel.push_back(rows);
  }

  report.bijection_ok = true;
  std::vector<std::vector<PointSet>> images;
  for (const ContactRelation& c : report.ncrel) {
    UltrafilterRelation r = r_relation(c);
    std::vector<PointSet> rows(r.rows.begin(), r.rows.end());
    images.push_back(rows);
    if (std::find(report.irel.begin(), report.irel.end(), rows) ==
        report.irel.end()) {
      report.bijection_ok = false;
      report.detail = "f(C) missed IRel";
    }
    Quotient q = quotient_space(ta, rows);
    if (!(contact_of_cover(make_cover(a, q.map)) == c)) {
      report.bijection_ok = false;
      report.detail = "g(f(C)) != C";
    }
  }
  for (const auto& rows : report.irel) {
    Quotient q = quotient_space(ta, rows);
    ContactRelation c = contact_of_cover(make_cover(a, q.map));
    UltrafilterRelation r = r_relation(c);
    std::vector<PointSet> back(r.rows.begin(), r.rows.end());
    if (back != rows) {
      report.bijection_ok = false;
      report.detail = "f(g(R)) != R";
    }
  }
  if (report.bijection_ok) {
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end() ||
        images.size() != report.irel.size()) {
      report.bijection_ok = false;
      report.detail = "f not bijective";
    }
  }
  return report;
}

Cover fed_to_D(const ContactRelation& c) { return cover_of_contact(c); }

ContactRelation d_to_fed(const Cover& d) { return contact_of_cover(d); }

FedMorphism fed_mor_to_D(const BoolHom& alpha, const ContactRelation& src,
                         const ContactRelation& tgt) {
  if (!(alpha.source == src.algebra) || !(alpha.target == tgt.algebra))
    throw ShapeMismatch("fed_mor_to_D: hom endpoints don't match");
  DVMap dv = check_dv(alpha.table, src, tgt);
  if (!dv.condition_f)
    throw ConditionFFailed("fed_mor_to_D: contact of images not reflected");

  Cover src_cover = cover_of_contact(src);
  Cover tgt_cover = cover_of_contact(tgt);
  ContMap t_alpha = dual_of_hom(alpha);  // T(A') -> T(A)
  const ContMap& pi = src_cover.pi;
  const ContMap& pi_prime = tgt_cover.pi;

  bool comf_ok = true;
  for (int u = 0; u < pi_prime.source.n_points(); ++u)
    for (int v = 0; v < pi_prime.source.n_points(); ++v)
      if (pi_prime(u) == pi_prime(v) && pi(t_alpha(u)) != pi(t_alpha(v)))
        comf_ok = false;
  if (!comf_ok)
    throw NotWellDefined("f_alpha fibre guard failed despite condition (F)");

  std::vector<int> table(pi_prime.target.n_points(), -1);
  for (int u = 0; u < pi_prime.source.n_points(); ++u)
    table[pi_prime(u)] = pi(t_alpha(u));

  FedMorphism m{alpha, src_cover, tgt_cover,
                ContMap{pi_prime.target, pi.target, table}};
  m.comf_ok = comf_ok;
  m.square_ok = compose(m.f_alpha, pi_prime) == compose(pi, t_alpha);
  m.quasi_open = map_predicates(m.f_alpha).quasi_open;
  return m;
}

MorphismEquiv check_morphism_equiv(const BoolHom& psi,
                                   const ContactRelation& src,
                                   const ContactRelation& tgt) {
  MorphismEquiv e;
  e.condition_f = check_dv(psi.table, src, tgt).condition_f;
  UltrafilterRelation r = r_relation(src);
  UltrafilterRelation r_prime = r_relation(tgt);
  ContMap t_psi = dual_of_hom(psi);
  e.r_preserving = true;
  for (int u = 0; u < tgt.algebra.n_atoms(); ++u)
    for (int v = 0; v < tgt.algebra.n_atoms(); ++v)
      if (((r_prime.rows[u] >> v) & 1) &&
          !((r.rows[t_psi(u)] >> t_psi(v)) & 1))
        e.r_preserving = false;
  e.in_theorem_scope = check_axioms(src.algebra, src.table()).is_nca &&
                       check_axioms(tgt.algebra, tgt.table()).is_nca;
  return e;
}

HHomeo h_homeo(const ContactRelation& c) {
  ContactAxioms ax = check_axioms(c.algebra, c.table());
  if (!ax.is_nca) throw NotNormal("h_homeo: NCA required");
  HHomeo h{cover_of_contact(c), psi_a(c), {}, false, false, false};

  std::vector<Ultrafilter> ults = ultrafilters(c.algebra);
  int n_classes = h.cover.pi.target.n_points();
  h.table.assign(n_classes, -1);
  for (int u = 0; u < static_cast<int>(ults.size()); ++u) {
    Cluster sigma = sigma_u(c, ults[u]).carrier;
    auto it = std::find(h.cluster_space.clusters.begin(),
                        h.cluster_space.clusters.end(), sigma);
    if (it == h.cluster_space.clusters.end())
      throw InternalContradiction("sigma_u is not a cluster in an NCA");
    int idx = static_cast<int>(it - h.cluster_space.clusters.begin());
    int cls = h.cover.pi(u);
    if (h.table[cls] != -1 && h.table[cls] != idx)
      throw InternalContradiction("h not constant on a quotient class");
    h.table[cls] = idx;
  }

  std::vector<int> seen = h.table;
  std::sort(seen.begin(), seen.end());
  h.bijective =
      static_cast<int>(h.cluster_space.clusters.size()) == n_classes &&
      std::adjacent_find(seen.begin(), seen.end()) == seen.end() &&
      (n_classes == 0 || seen.front() == 0);

  if (h.bijective) {
    ContMap fwd{h.cover.pi.target, h.cluster_space.space, h.table};
    std::vector<int> inv_table(n_classes);
    for (int k = 0; k < n_classes; ++k) inv_table[h.table[k]] = k;
    ContMap bwd{h.cluster_space.space, h.cover.pi.target, inv_table};
    h.continuous_both_ways = is_continuous(fwd) && is_continuous(bwd);
  }

  h.image_formula_ok = true;
  for (Elem a = 0; a < c.algebra.size(); ++a) {
    PointSet classes = h.cover.pi.image(stone_s(a));
    PointSet image = 0;
    for (int k = 0; k < n_classes; ++k)
      if ((classes >> k) & 1) image |= PointSet{1} << h.table[k];
    if (image != h.cluster_space.upsilon(a)) h.image_formula_ok = false;
  }
  return h;
}

Factorization factorize(const ContMap& f) {
  if (f.image(f.source.full()) != f.target.full())
    throw NotSurjective("factorize needs a surjection");
  int n = f.source.n_points();
  std::vector<PointSet> r_f(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f(x) == f(y)) r_f[x] |= PointSet{1} << y;
  Quotient q = quotient_space(f.source, r_f);

  std::vector<int> h_table(q.space.n_points(), -1);
  for (int x = 0; x < n; ++x) h_table[q.class_of[x]] = f(x);
  Factorization out{r_f, q, ContMap{q.space, f.target, h_table}};
  if (!(compose(out.h, out.q.map) == f))
    throw InternalContradiction("h_f . q_f != f");

  std::vector<int> seen = h_table;
  std::sort(seen.begin(), seen.end());
  bool bijective =
      out.q.space.n_points() == f.target.n_points() &&
      std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  if (bijective) {
    std::vector<int> inv(f.target.n_points());
    for (int k = 0; k < out.q.space.n_points(); ++k) inv[h_table[k]] = k;
    out.h_homeomorphism =
        is_continuous(out.h) &&
        is_continuous(ContMap{f.target, out.q.space, inv});
  }
  return out;
}

F2Report f2_prime(const Cover& cover) {
  Factorization fact = factorize(cover.pi);
  return F2Report{make_cover(cover.algebra, fact.q.map), fact.h,
                  fact.q.map == cover.pi, fact.h_homeomorphism};
}

PsiapReport finite_shadow_psiap(const FinTopSpace& x) {
  if (!x.is_discrete())
    throw NotDiscrete("finite_shadow_psiap: X must be discrete");
  FinBoolAlg a = clopen_algebra(x);

  // p = pi_X . t_EX^{-1} collapses to the inverse of the counit
  ContMap t_x = counit_map(x);
  std::vector<int> p_table(x.n_points());
  for (int pt = 0; pt < x.n_points(); ++pt) p_table[t_x(pt)] = pt;
  ContMap p{stone_space(a), x, p_table};

  PsiapReport report{standard_contact(x), a,
                     contact_of_cover(make_cover(a, p)), false,
                     "projective cover degenerate: EX = X, pi_X = 1"};

  // phi_pi : CO(EX) -> RC(X), P |-> p(s(P))
  std::vector<Elem> iso(a.size());
  for (Elem e = 0; e < a.size(); ++e)
    iso[e] = report.phi_t.rc.element_of(p.image(stone_s(e)));
  report.ca_iso = check_hom(a, report.phi_t.rc.algebra, iso).is_hom;
  std::vector<Elem> sorted = iso;
  std::sort(sorted.begin(), sorted.end());
  for (Elem e = 0; e < a.size() && report.ca_iso; ++e)
    if (sorted[e] != e) report.ca_iso = false;
  for (Elem e = 0; e < a.size() && report.ca_iso; ++e)
    for (Elem g = 0; g < a.size(); ++g)
      if (report.psi_prime.contact(e, g) !=
          report.phi_t.relation.contact(iso[e], iso[g]))
        report.ca_iso = false;
  return report;
}

bool psiap_morphism_check(const ContMap& f) {
  if (!f.source.is_discrete() || !f.target.is_discrete())
    throw NotDiscrete("psiap_morphism_check: discrete spaces only");
  PsiTMorphism phi_t = psi_t_mor(f);
  BoolHom psi_prime = dual_of_map(f);  // CO(X') -> CO(X), clopen preimage
  const RCAlgebra& rcx = phi_t.target.rc;
  const RCAlgebra& rcy = phi_t.source.rc;
  for (Elem h = 0; h < rcy.algebra.size(); ++h) {
    Elem co_elem = rcy.set_of(h);  // phi_pi' is the identity on point sets
    if (rcx.set_of(phi_t.table[h]) !=
        static_cast<PointSet>(psi_prime.table[co_elem]))
      return false;
  }
  return true;
}

}  // namespace finduality
