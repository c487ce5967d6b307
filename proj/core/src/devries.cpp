#include "finduality/devries.hpp"

#include <algorithm>
#include <set>

#include "finduality/errors.hpp"

namespace finduality {

DVMap check_dv(const std::vector<Elem>& table, const ContactRelation& src,
               const ContactRelation& tgt) {
  const FinBoolAlg& a = src.algebra;
  const FinBoolAlg& b = tgt.algebra;
  if (table.size() != a.size())
    throw ShapeMismatch("dv table has " + std::to_string(table.size()) +
                        " entries for a source of size " +
                        std::to_string(a.size()));
  for (Elem x = 0; x < a.size(); ++x)
    if (!b.is_element(table[x]))
      throw ShapeMismatch("dv table entry out of the target universe");

  DVMap m{src, tgt, table};

  m.dv1 = table[a.zero()] == b.zero();

  m.dv2 = true;
  for (Elem x = 0; x < a.size() && m.dv2; ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (table[a.meet(x, y)] != b.meet(table[x], table[y])) {
        m.dv2 = false;
        break;
      }

  m.dv3 = true;
  for (Elem x = 0; x < a.size() && m.dv3; ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (src.ll(x, y) &&
          !tgt.ll(b.complement(table[a.complement(x)]), table[y])) {
        m.dv3 = false;
        break;
      }

  std::vector<Elem> checked = cuk(table, src, b);
  m.dv4 = checked == table;

  HomCheck hc = check_hom(a, b, table);
  m.is_boolean_hom = hc.is_hom;
  m.is_sup_preserving = hc.preserves_all_suprema;

  m.condition_f = true;
  m.condition_f_prime = true;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      if (tgt.contact(table[x], table[y]) && !src.contact(x, y))
        m.condition_f = false;
      if (src.ll(x, y) && !tgt.ll(table[x], table[y]))
        m.condition_f_prime = false;
    }

  return m;
}

DVMap dv_identity(const ContactRelation& c) {
  std::vector<Elem> table(c.algebra.size());
  for (Elem x = 0; x < c.algebra.size(); ++x) table[x] = x;
  return check_dv(table, c, c);
}

std::vector<Elem> cuk(const std::vector<Elem>& psi, const ContactRelation& src,
                      const FinBoolAlg& tgt) {
  const FinBoolAlg& a = src.algebra;
  if (psi.size() != a.size())
    throw ShapeMismatch("cuk input table size mismatch");
  std::vector<Elem> out(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    Elem s = tgt.zero();
    for (Elem y = 0; y < a.size(); ++y)
      if (src.ll(y, x)) s = tgt.join(s, psi[y]);
    out[x] = s;
  }
  return out;
}

std::vector<Elem> diamond(const DVMap& phi2, const DVMap& phi1) {
  if (!(phi1.target == phi2.source))
    throw NotComposable("diamond: middle contact algebras differ");
  std::vector<Elem> composite(phi1.table.size());
  for (Elem x = 0; x < composite.size(); ++x)
    composite[x] = phi2.table[phi1.table[x]];
  return cuk(composite, phi1.source, phi2.target.algebra);
}

DVMorphismFacts fact_dvm_checks(const DVMap& phi) {
  if (!phi.is_dv()) throw NotDVMorphism("fact_dvm_checks: DV1-DV4 required");
  const FinBoolAlg& a = phi.source.algebra;
  const FinBoolAlg& b = phi.target.algebra;
  DVMorphismFacts facts;
  facts.preserves_top = phi.table[a.one()] == b.one();
  facts.complement_bound = true;
  for (Elem x = 0; x < a.size(); ++x)
    if (!b.leq(phi.table[a.complement(x)], b.complement(phi.table[x])))
      facts.complement_bound = false;
  facts.preserves_ll = true;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (phi.source.ll(x, y) && !phi.target.ll(phi.table[x], phi.table[y]))
        facts.preserves_ll = false;
  return facts;
}

StandardContact psi_t(const FinTopSpace& space) {
  return standard_contact(space);
}

PsiTMorphism psi_t_mor(const ContMap& f) {
  if (!is_continuous(f)) throw PreconditionFailed("psi_t_mor: map not continuous");
  PsiTMorphism out{psi_t(f.target), psi_t(f.source), {}};
  const RCAlgebra& rcy = out.source.rc;
  const RCAlgebra& rcx = out.target.rc;
  out.table.resize(rcy.algebra.size());
  for (Elem g = 0; g < rcy.algebra.size(); ++g) {
    // preimage of an open set is open, so the closure is regular closed
    PointSet set = f.source.closure(f.preimage(f.target.interior(rcy.set_of(g))));
    out.table[g] = rcx.element_of(set);
  }
  return out;
}

PointSet ClusterSpace::upsilon(Elem a) const {
  PointSet out = 0;
  for (std::size_t i = 0; i < clusters.size(); ++i)
    if ((clusters[i] >> a) & 1) out |= PointSet{1} << i;
  return out;
}

ClusterSpace psi_a(const ContactRelation& c) {
  ContactAxioms ax = check_axioms(c.algebra, c.table());
  if (!ax.is_ca) throw NotContact("psi_a: C1-C4 required");
  ClusterSpace cs{c, clusters(c), FinTopSpace(0, {0})};
  int n = static_cast<int>(cs.clusters.size());
  PointSet full = n == 0 ? 0 : (PointSet{1} << n) - 1;

  std::set<PointSet> opens{0, full};
  for (Elem a = 0; a < c.algebra.size(); ++a)
    opens.insert(full & ~cs.upsilon(a));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<PointSet> snapshot(opens.begin(), opens.end());
    for (PointSet u : snapshot)
      for (PointSet v : snapshot) {
        grew |= opens.insert(u | v).second;
        grew |= opens.insert(u & v).second;
      }
  }
  cs.space = FinTopSpace(n, std::vector<PointSet>(opens.begin(), opens.end()));
  return cs;
}

PsiAMorphism psi_a_mor(const DVMap& phi) {
  PsiAMorphism out{psi_a(phi.target), psi_a(phi.source), {}, {}, true};
  const FinBoolAlg& a = phi.source.algebra;
  const FinBoolAlg& b = phi.target.algebra;
  for (Cluster sigma : out.domain.clusters) {
    ElemSet image = 0;
    for (Elem x = 0; x < a.size(); ++x) {
      bool in = true;
      for (Elem y = 0; y < a.size(); ++y) {
        if (!phi.source.ll(y, a.complement(x))) continue;
        if (!((sigma >> b.complement(phi.table[y])) & 1)) {
          in = false;
          break;
        }
      }
      if (in) image |= ElemSet{1} << x;
    }
    out.raw.push_back(image);
    auto it = std::find(out.codomain.clusters.begin(),
                        out.codomain.clusters.end(), image);
    if (it == out.codomain.clusters.end()) {
      out.table.push_back(-1);
      out.all_clusters = false;
    } else {
      out.table.push_back(
          static_cast<int>(it - out.codomain.clusters.begin()));
    }
  }
  return out;
}

std::vector<int> psi_a_mor_simplified(const DVMap& phi) {
  if (!phi.is_boolean_hom)
    throw PreconditionFailed("psi_a_mor_simplified: not a Boolean hom");
  const FinBoolAlg& a = phi.source.algebra;
  std::vector<Cluster> dom_clusters = clusters(phi.target);
  std::vector<Cluster> cod_clusters = clusters(phi.source);
  std::vector<Ultrafilter> dom_ults = ultrafilters(phi.target.algebra);
  std::vector<int> out;
  for (Cluster sigma : dom_clusters) {
    const Ultrafilter* generator = nullptr;
    for (const Ultrafilter& u : dom_ults)
      if (sigma_u(phi.target, u).carrier == sigma) {
        generator = &u;
        break;
      }
    if (!generator)
      throw PreconditionFailed(
          "psi_a_mor_simplified: a domain cluster is not of the form sigma_u");
    ElemSet preimage = 0;
    for (Elem x = 0; x < a.size(); ++x)
      if ((generator->carrier >> phi.table[x]) & 1)
        preimage |= ElemSet{1} << x;
    if (!is_ultrafilter_set(a, preimage))
      throw InternalContradiction(
          "hom preimage of an ultrafilter is not an ultrafilter");
    std::vector<Ultrafilter> cod_ults = ultrafilters(a);
    const Ultrafilter* v = nullptr;
    for (const Ultrafilter& u : cod_ults)
      if (u.carrier == preimage) {
        v = &u;
        break;
      }
    Cluster image = sigma_u(phi.source, *v).carrier;
    auto it = std::find(cod_clusters.begin(), cod_clusters.end(), image);
    if (it == cod_clusters.end())
      throw InternalContradiction("sigma of an ultrafilter is not a cluster");
    out.push_back(static_cast<int>(it - cod_clusters.begin()));
  }
  return out;
}

}  // namespace finduality
