#include "finduality/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "finduality/covering.hpp"
#include "finduality/extension.hpp"
#include "finduality/fedbridge.hpp"
#include "finduality/stone.hpp"

namespace finduality {

namespace {

class SuiteTimer {
 public:
  explicit SuiteTimer(CheckReport& report)
      : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~SuiteTimer() {
    report_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    report_.sort_checks();
  }

 private:
  CheckReport& report_;
  std::chrono::steady_clock::time_point start_;
};

std::string describe_space(const FinTopSpace& x) {
  std::ostringstream out;
  out << "space(n=" << x.n_points() << ", opens=[";
  for (std::size_t i = 0; i < x.opens().size(); ++i)
    out << (i ? "," : "") << x.opens()[i];
  out << "])";
  return out.str();
}

std::string describe_map(const ContMap& f) {
  std::ostringstream out;
  out << describe_space(f.source) << " -> " << describe_space(f.target)
      << " via [";
  for (std::size_t i = 0; i < f.table.size(); ++i)
    out << (i ? "," : "") << f.table[i];
  out << "]";
  return out.str();
}

std::string describe_kernel(int n, const std::vector<std::uint32_t>& kernel) {
  std::ostringstream out;
  out << "kernel(n=" << n << ", rows=[";
  for (std::size_t i = 0; i < kernel.size(); ++i)
    out << (i ? "," : "") << kernel[i];
  out << "])";
  return out.str();
}

bool quasi_open_only(const ContMap& f) {
  for (PointSet u : f.source.opens()) {
    if (u == 0) continue;
    if (f.target.interior(f.image(u)) == 0) return false;
  }
  return true;
}

}  // namespace

CheckReport stone_suite(int max_atoms) {
  CheckReport report;
  report.suite = "stone";
  SuiteTimer timer(report);
  StonePack pack = duality_pack(max_atoms);
  report.add("functoriality-of-t-and-s", pack.functors_ok, pack.failure);
  report.add("naturality-of-unit-and-counit", pack.naturality_ok,
             pack.failure);
  report.add("unit-and-counit-are-isos", pack.nat_iso_ok, pack.failure);
  report.add("triangular-identities", pack.triangular_ok, pack.failure);
  return report;
}

CheckReport topology_suite(int max_points) {
  CheckReport report;
  report.suite = "topology";
  SuiteTimer timer(report);
  max_points = std::clamp(max_points, 1, 4);

  if (max_points >= 3) {
    std::size_t n3 = enumerate_topologies(3).size();
    report.add("labeled-topologies-on-3-points", n3 == 29,
               "got " + std::to_string(n3));
  }
  if (max_points >= 4) {
    std::size_t n4 = enumerate_topologies(4).size();
    report.add("labeled-topologies-on-4-points", n4 == 355,
               "got " + std::to_string(n4));
  }

  // RC(X) laws and the standard contact, over every labeled topology
  bool rc_ok = true, rho_ok = true;
  std::string rc_witness, rho_witness;
  for (int n = 1; n <= max_points; ++n) {
    for (const FinTopSpace& x : enumerate_topologies(n)) {
      RCAlgebra rc = rc_algebra(x);
      for (Elem a = 0; a < rc.algebra.size() && rc_ok; ++a) {
        PointSet fa = rc.set_of(a);
        if (x.closure(x.interior(fa)) != fa) rc_ok = false;
        for (Elem b = 0; b < rc.algebra.size(); ++b) {
          PointSet fb = rc.set_of(b);
          if (rc.set_of(rc.algebra.join(a, b)) != (fa | fb) ||
              rc.set_of(rc.algebra.meet(a, b)) !=
                  x.closure(x.interior(fa & fb)) ||
              rc.set_of(rc.algebra.complement(a)) !=
                  x.closure(x.full() & ~fa)) {
            rc_ok = false;
            break;
          }
        }
      }
      if (!rc_ok && rc_witness.empty()) rc_witness = describe_space(x);
      StandardContact sc = standard_contact(x);
      if (!check_axioms(sc.rc.algebra, sc.relation.table()).is_ca) {
        rho_ok = false;
        if (rho_witness.empty()) rho_witness = describe_space(x);
      }
    }
  }
  report.add("rc-boolean-laws", rc_ok, rc_witness);
  report.add("rho-x-satisfies-c1-c4", rho_ok, rho_witness);

  // map predicates over all continuous maps between spaces on <= 3 points
  std::vector<FinTopSpace> small;
  for (int n = 1; n <= std::min(max_points, 3); ++n)
    for (const FinTopSpace& x : enumerate_topologies(n)) small.push_back(x);

  bool qo_skel = true, blaszczyk = true, skehj = true, ci_qo = true;
  std::string w_qo, w_bl, w_sk, w_ci;
  std::vector<std::string> rc_image_findings;
  struct FlaggedMap {
    ContMap map;
    bool quasi_open;
    bool dense_image;
  };
  std::vector<std::vector<std::vector<FlaggedMap>>> table(
      small.size(), std::vector<std::vector<FlaggedMap>>(small.size()));

  for (std::size_t xi = 0; xi < small.size(); ++xi) {
    const FinTopSpace& x = small[xi];
    RCAlgebra rcx = rc_algebra(x);
    for (std::size_t yi = 0; yi < small.size(); ++yi) {
      const FinTopSpace& y = small[yi];
      for (const ContMap& f : all_continuous_maps(x, y)) {
        MapFlags flags = map_predicates(f);
        if (flags.quasi_open && !flags.skeletal) {
          qo_skel = false;
          if (w_qo.empty()) w_qo = describe_map(f);
        }
        bool dense_pullbacks = true;
        for (PointSet v : y.opens())
          if (y.closure(v) == y.full() && x.closure(f.preimage(v)) != x.full())
            dense_pullbacks = false;
        if (flags.skeletal != dense_pullbacks) {
          blaszczyk = false;
          if (w_bl.empty()) w_bl = describe_map(f);
        }
        if (flags.skeletal && !flags.satisfies_skehj) {
          skehj = false;
          if (w_sk.empty()) w_sk = describe_map(f);
        }
        bool rc_images = true;
        for (Elem a = 0; a < rcx.algebra.size(); ++a) {
          PointSet image = y.closure(f.image(rcx.set_of(a)));
          if (y.closure(y.interior(image)) != image) rc_images = false;
        }
        if (flags.skeletal != rc_images &&
            rc_image_findings.size() < 3)
          rc_image_findings.push_back(describe_map(f));
        if (flags.closed_map && flags.irreducible) {
          if (!flags.quasi_open) {
            ci_qo = false;
            if (w_ci.empty()) w_ci = describe_map(f);
          }
          for (PointSet u : x.opens()) {
            if (u == 0) continue;
            PointSet sharp = f_sharp(f, u);
            if (sharp == 0 || !y.is_open(sharp)) {
              ci_qo = false;
              if (w_ci.empty()) w_ci = "f_sharp: " + describe_map(f);
            }
          }
        }
        table[xi][yi].push_back(
            {f, flags.quasi_open,
             y.closure(f.image(x.full())) == y.full()});
      }
    }
  }
  report.add("quasi-open-implies-skeletal", qo_skel, w_qo);
  report.add("blaszczyk-skeletal-criterion", blaszczyk, w_bl);
  report.add("skeletal-implies-skehj", skehj, w_sk);
  report.add("closed-irreducible-implies-quasi-open", ci_qo, w_ci);
  {
    CheckEntry entry;
    entry.name = "skeletal-iff-rc-images";
    entry.status = rc_image_findings.empty() ? CheckStatus::Pass
                                             : CheckStatus::Finding;
    if (!rc_image_findings.empty()) entry.witness = rc_image_findings.front();
    report.add_entry(entry);
  }

  // qopl: g.f and f quasi-open with a dense image force g quasi-open
  bool qopl = true;
  std::string w_qopl;
  for (std::size_t xi = 0; xi < small.size() && qopl; ++xi)
    for (std::size_t yi = 0; yi < small.size() && qopl; ++yi)
      for (const FlaggedMap& f : table[xi][yi]) {
        if (!f.quasi_open || !f.dense_image) continue;
        for (std::size_t zi = 0; zi < small.size(); ++zi)
          for (const FlaggedMap& g : table[yi][zi]) {
            if (g.quasi_open) continue;
            if (quasi_open_only(compose(g.map, f.map))) {
              qopl = false;
              w_qopl = describe_map(g.map) + " after " + describe_map(f.map);
            }
          }
      }
  report.add("qopl-composition-lemma", qopl, w_qopl);
  return report;
}

CheckReport contact_suite(int max_atoms) {
  CheckReport report;
  report.suite = "contact";
  SuiteTimer timer(report);
  max_atoms = std::clamp(max_atoms, 1, 4);

  bool unique_nca = true, conclustth = true, uniqult = true, fact29 = true,
       relrult = true;
  std::string w_nca, w_ccl, w_uni, w_f29, w_rel;

  for (int n = 1; n <= max_atoms; ++n) {
    FinBoolAlg alg(n);
    std::vector<Ultrafilter> ults = ultrafilters(alg);
    int nca_count = 0;
    for (const auto& kernel : all_kernels(alg)) {
      ContactRelation c = kernel_to_contact(alg, kernel);
      ContactAxioms ax = check_axioms(alg, c.table());
      std::vector<Cluster> cls = clusters(c);

      // fact29: clusters are never nested, in any CA
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = 0; j < cls.size(); ++j)
          if (i != j && (cls[i] & ~cls[j]) == 0) {
            fact29 = false;
            if (w_f29.empty()) w_f29 = describe_kernel(n, kernel);
          }

      // relrult(a): contact is witnessed by R-related ultrafilters
      UltrafilterRelation r = r_relation(c);
      for (Elem a = 0; a < alg.size(); ++a)
        for (Elem b = 0; b < alg.size(); ++b) {
          bool witnessed = false;
          for (std::size_t i = 0; i < ults.size() && !witnessed; ++i) {
            if (!((ults[i].carrier >> a) & 1)) continue;
            for (std::size_t j = 0; j < ults.size(); ++j)
              if (((ults[j].carrier >> b) & 1) && ((r.rows[i] >> j) & 1)) {
                witnessed = true;
                break;
              }
          }
          if (witnessed != c.contact(a, b)) {
            relrult = false;
            if (w_rel.empty()) w_rel = describe_kernel(n, kernel);
          }
        }

      if (!ax.is_nca) continue;
      ++nca_count;
      if (!(c == rho_s(alg))) {
        unique_nca = false;
        if (w_nca.empty()) w_nca = describe_kernel(n, kernel);
      }

      // conclustth: every cluster is sigma_u, and membership in sigma_u is
      // realized by an ultrafilter generating the same cluster
      for (const Ultrafilter& u : ults) {
        SigmaU su = sigma_u(c, u);
        if (!su.is_cluster ||
            std::find(cls.begin(), cls.end(), su.carrier) == cls.end()) {
          conclustth = false;
          if (w_ccl.empty()) w_ccl = describe_kernel(n, kernel);
        }
        for (Elem a = 0; a < alg.size(); ++a) {
          if (!((su.carrier >> a) & 1)) continue;
          bool realized = false;
          for (const Ultrafilter& w : ults)
            if (((w.carrier >> a) & 1) &&
                sigma_u(c, w).carrier == su.carrier)
              realized = true;
          if (!realized) {
            conclustth = false;
            if (w_ccl.empty()) w_ccl = describe_kernel(n, kernel);
          }
        }
      }
      for (Cluster sigma : cls) {
        bool generated = false;
        for (const Ultrafilter& u : ults)
          if (sigma_u(c, u).carrier == sigma) generated = true;
        if (!generated) {
          conclustth = false;
          if (w_ccl.empty()) w_ccl = describe_kernel(n, kernel);
        }
      }

      // uniqult: each ultrafilter sits inside exactly one cluster
      for (const Ultrafilter& u : ults) {
        int containing = 0;
        for (Cluster sigma : cls)
          if ((u.carrier & ~sigma) == 0) ++containing;
        if (containing != 1) {
          uniqult = false;
          if (w_uni.empty()) w_uni = describe_kernel(n, kernel);
        }
      }
    }
    if (nca_count != 1) {
      unique_nca = false;
      if (w_nca.empty())
        w_nca = "n=" + std::to_string(n) + " has " +
                std::to_string(nca_count) + " NCAs";
    }
  }
  report.add("unique-nca-is-rho-s", unique_nca, w_nca);
  report.add("conclustth-clusters-are-sigma-u", conclustth, w_ccl,
             "finite NCAs degenerate to rho_s");
  report.add("uniqult-one-cluster-per-ultrafilter", uniqult, w_uni);
  report.add("fact29-clusters-never-nested", fact29, w_f29);
  report.add("relrult-ultrafilter-witnesses", relrult, w_rel);
  return report;
}

CheckReport extension_suite() {
  CheckReport report;
  report.suite = "extension";
  SuiteTimer timer(report);

  for (const std::string& name : {std::string("syncat1"), std::string("topcat")}) {
    Fixture fx = builtin_fixture(name);
    ExtensionPack pack = extension_from_fixture(fx);
    report.add(name + "/covering-p1-p5", pack.cov.is_covering(),
               pack.cov.witness);
    report.add(name + "/covering-p4-star", pack.cov.p4_star, pack.cov.witness);
    report.add(name + "/covering-p5-star", pack.cov.p5_star, pack.cov.witness);
    for (const NamedCheck& check : verify_extension(pack))
      report.add(name + "/" + check.name, check.ok, check.detail);

    // stronger-conditions round trip: P recovered from the chosen covers
    std::vector<int> p_pi =
        derive_P_from_pi(pack.host, pack.sub, pack.cov.pi);
    std::vector<int> p = pack.covering;
    std::sort(p.begin(), p.end());
    report.add(name + "/p-pi-round-trip", p_pi == p);

    SemiAdjointReport sa = check_semi_adjoint(pack.host, pack.sub, pack.epi);
    report.add(name + "/semi-adjoint-triangular", sa.triangular, sa.failure);
    report.add(name + "/semi-adjoint-fully", sa.fully, sa.failure);
    report.add(name + "/semi-adjoint-left-adjoint", sa.left_adjoint,
               sa.failure);
  }

  Fixture bad = builtin_fixture("syncat2");
  CoveringReport cov = check_covering_class(
      bad.host, full_subcategory(bad.host, bad.sub_objects), bad.covering,
      bad.chosen_pi);
  report.add("syncat2/p5-fails-with-endosquare-witness",
             !cov.p5 && cov.witness == "P5: no fill-in for (e, p0, p0)",
             cov.witness);
  return report;
}

CheckReport fedbridge_suite(int max_atoms) {
  CheckReport report;
  report.suite = "fedbridge";
  SuiteTimer timer(report);
  max_atoms = std::clamp(max_atoms, 1, 4);

  bool mainpro = true;
  std::string w_main;
  for (int n = 1; n <= max_atoms; ++n) {
    NcrelIrelReport r = ncrel_irel_check(FinBoolAlg(n));
    if (!r.bijection_ok) {
      mainpro = false;
      if (w_main.empty()) w_main = "n=" + std::to_string(n) + ": " + r.detail;
    }
  }
  report.add("mainpro-ncrel-irel-bijection", mainpro, w_main);

  int small = std::min(max_atoms, 3);
  bool cor1f = true;
  for (int n = 1; n <= small; ++n) {
    ContactRelation c = rho_s(FinBoolAlg(n));
    if (!(d_to_fed(fed_to_D(c)) == c)) cor1f = false;
  }
  report.add("cor1f-round-trip", cor1f);

  bool morphpro = true;
  std::string w_mor;
  for (int m = 1; m <= small; ++m)
    for (int n = 1; n <= small; ++n) {
      FinBoolAlg bm(m), bn(n);
      for (const BoolHom& h : all_homs(bm, bn)) {
        MorphismEquiv e = check_morphism_equiv(h, rho_s(bm), rho_s(bn));
        if (!e.condition_f || !e.r_preserving || !e.equivalent()) {
          morphpro = false;
          if (w_mor.empty())
            w_mor = "hom B" + std::to_string(m) + "->B" + std::to_string(n);
        }
      }
    }
  report.add("morphpro-condition-f-equivalence", morphpro, w_mor);

  bool hh = true, hnat = true;
  for (int n = 1; n <= small; ++n) {
    HHomeo h = h_homeo(rho_s(FinBoolAlg(n)));
    if (!h.bijective || !h.continuous_both_ways || !h.image_formula_ok)
      hh = false;
  }
  for (int m = 1; m <= small; ++m)
    for (int n = 1; n <= small; ++n) {
      FinBoolAlg bm(m), bn(n);
      ContactRelation cm = rho_s(bm), cn = rho_s(bn);
      HHomeo h = h_homeo(cm), h_prime = h_homeo(cn);
      for (const BoolHom& hom : all_homs(bm, bn)) {
        FedMorphism fm = fed_mor_to_D(hom, cm, cn);
        std::vector<int> phi_a =
            psi_a_mor_simplified(check_dv(hom.table, cm, cn));
        for (int x = 0; x < fm.f_alpha.source.n_points(); ++x)
          if (phi_a[h_prime.table[x]] != h.table[fm.f_alpha(x)]) hnat = false;
      }
    }
  report.add("h-homeomorphism", hh);
  report.add("h-naturality-squares", hnat);

  bool f2 = true;
  for (int n = 1; n <= small; ++n) {
    F2Report r = f2_prime(cover_of_contact(rho_s(FinBoolAlg(n))));
    if (!r.already_nqm || !r.iso_component) f2 = false;
  }
  report.add("f2-prime-after-f2-is-identity", f2);

  bool psiap_obj = true, psiap_mor = true;
  for (int n = 1; n <= small; ++n)
    if (!finite_shadow_psiap(discrete_space(n)).ca_iso) psiap_obj = false;
  for (int m = 1; m <= small; ++m)
    for (int n = 1; n <= small; ++n)
      for (const ContMap& f :
           all_continuous_maps(discrete_space(m), discrete_space(n)))
        if (!psiap_morphism_check(f)) psiap_mor = false;
  report.add("psiap-object-comparison", psiap_obj, "",
             "projective covers degenerate on finite discrete spaces");
  report.add("psiap-morphism-comparison", psiap_mor);
  return report;
}

CheckReport oracle_suite() {
  CheckReport report;
  report.suite = "oracle";
  SuiteTimer timer(report);

  std::size_t n3 = enumerate_topologies(3).size();
  std::size_t n4 = enumerate_topologies(4).size();
  report.add("topology-count-3-points", n3 == 29, "got " + std::to_string(n3));
  report.add("topology-count-4-points", n4 == 355,
             "got " + std::to_string(n4));

  FinBoolAlg b2(2);
  std::size_t homs = all_homs(b2, b2).size();
  report.add("hom-count-b2-b2", homs == 4, "got " + std::to_string(homs));

  bool cluster_counts = true;
  std::string w;
  for (int n = 1; n <= 4; ++n) {
    std::size_t count = clusters(rho_s(FinBoolAlg(n))).size();
    if (count != static_cast<std::size_t>(n)) {
      cluster_counts = false;
      if (w.empty())
        w = "rho_s on B" + std::to_string(n) + " gave " +
            std::to_string(count);
    }
  }
  report.add("cluster-count-rho-s", cluster_counts, w);

  std::size_t pinch =
      clusters(standard_contact(pinch_space()).relation).size();
  report.add("cluster-count-rc-pinch", pinch == 1,
             "got " + std::to_string(pinch));
  return report;
}

std::vector<CheckReport> all_suites(int max_atoms, int max_points) {
  return {stone_suite(max_atoms < 0 ? 3 : max_atoms),
          topology_suite(max_points < 0 ? 4 : max_points),
          contact_suite(max_atoms < 0 ? 4 : max_atoms),
          extension_suite(),
          fedbridge_suite(max_atoms < 0 ? 4 : max_atoms),
          oracle_suite()};
}

}  // namespace finduality
