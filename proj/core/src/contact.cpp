#include "finduality/contact.hpp"

#include <algorithm>
#include <bit>

#include "finduality/errors.hpp"

namespace finduality {

namespace {

// Atoms of a touching some atom of b, per the kernel.
bool kernel_contact(const std::vector<std::uint32_t>& kernel, Elem a, Elem b) {
  std::uint32_t rest = a;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if (kernel[static_cast<std::size_t>(i)] & b) return true;
  }
  return false;
}

bool in_rel(const RelTable& t, Elem a, Elem b) {
  return (t[a] >> b) & 1;
}

}  // namespace

bool ContactRelation::contact(Elem a, Elem b) const {
  if (!algebra.is_element(a) || !algebra.is_element(b)) {
    throw ShapeMismatch("contact argument outside the universe");
  }
  return kernel_contact(kernel, a, b);
}

RelTable ContactRelation::table() const {
  RelTable t(algebra.size(), 0);
  for (Elem a = 0; a < algebra.size(); ++a) {
    for (Elem b = 0; b < algebra.size(); ++b) {
      if (kernel_contact(kernel, a, b)) t[a] |= ElemSet{1} << b;
    }
  }
  return t;
}

bool operator==(const ContactRelation& c, const ContactRelation& d) {
  return c.algebra == d.algebra && c.kernel == d.kernel;
}

ContactAxioms check_axioms(const FinBoolAlg& alg, const RelTable& table) {
  if (table.size() != alg.size()) {
    throw ShapeMismatch("relation table must be total on the universe");
  }
  const Elem n = alg.size();
  ContactAxioms out;

  out.c1 = out.c2 = out.c3 = out.c4 = out.c5 = out.c6 = true;
  for (Elem a = 0; a < n; ++a) {
    if (a != alg.zero() && !in_rel(table, a, a)) out.c1 = false;
    for (Elem b = 0; b < n; ++b) {
      if (in_rel(table, a, b)) {
        if (a == alg.zero() || b == alg.zero()) out.c2 = false;
        if (!in_rel(table, b, a)) out.c3 = false;
      }
      for (Elem c = 0; c < n && out.c4; ++c) {
        bool lhs = in_rel(table, a, alg.join(b, c));
        bool rhs = in_rel(table, a, b) || in_rel(table, a, c);
        if (lhs != rhs) out.c4 = false;
      }
      if (!in_rel(table, a, b)) {
        bool interp = false;
        for (Elem c = 0; c < n; ++c) {
          if (!in_rel(table, a, c) && !in_rel(table, b, alg.complement(c))) {
            interp = true;
            break;
          }
        }
        if (!interp) out.c5 = false;
      }
    }
    if (a != alg.one()) {
      bool found = false;
      for (Elem b = 0; b < n; ++b) {
        if (b != alg.zero() && !in_rel(table, b, a)) {
          found = true;
          break;
        }
      }
      if (!found) out.c6 = false;
    }
  }
  out.is_ca = out.c1 && out.c2 && out.c3 && out.c4;
  out.is_nca = out.is_ca && out.c5 && out.c6;

  // The derived relation a << b iff a (-C) b*.
  auto ll = [&](Elem a, Elem b) { return !in_rel(table, a, alg.complement(b)); };
  out.ll1 = out.ll2 = out.ll3 = out.ll4 = out.ll5 = out.ll6 = out.ll7 = true;
  out.ll2 = ll(alg.zero(), alg.zero());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (ll(a, b)) {
        if (!alg.leq(a, b)) out.ll1 = false;
        if (!ll(alg.complement(b), alg.complement(a))) out.ll7 = false;
      }
    }
  }
  for (Elem a = 0; a < n && out.ll3; ++a) {
    for (Elem b = 0; b < n && out.ll3; ++b) {
      if (!alg.leq(a, b)) continue;
      for (Elem c = 0; c < n && out.ll3; ++c) {
        if (!ll(b, c)) continue;
        for (Elem t = 0; t < n; ++t) {
          if (alg.leq(c, t) && !ll(a, t)) {
            out.ll3 = false;
            break;
          }
        }
      }
    }
  }
  for (Elem c = 0; c < n && out.ll4; ++c) {
    for (Elem a = 0; a < n && out.ll4; ++a) {
      if (!ll(a, c)) continue;
      for (Elem b = 0; b < n; ++b) {
        if (ll(b, c) && !ll(alg.join(a, b), c)) {
          out.ll4 = false;
          break;
        }
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem c = 0; c < n; ++c) {
      if (!ll(a, c)) continue;
      bool interp = false;
      for (Elem b = 0; b < n; ++b) {
        if (ll(a, b) && ll(b, c)) {
          interp = true;
          break;
        }
      }
      if (!interp) out.ll5 = false;
    }
    if (a != alg.zero()) {
      bool found = false;
      for (Elem b = 0; b < n; ++b) {
        if (b != alg.zero() && ll(b, a)) {
          found = true;
          break;
        }
      }
      if (!found) out.ll6 = false;
    }
  }

  // C recovered from << via a C b iff not (a << b*).
  out.ll_roundtrip = true;
  for (Elem a = 0; a < n && out.ll_roundtrip; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (in_rel(table, a, b) != !ll(a, alg.complement(b))) {
        out.ll_roundtrip = false;
        break;
      }
    }
  }
  return out;
}

ContactRelation rho_s(const FinBoolAlg& alg) {
  if (alg.n_atoms() == 0) {
    throw DegenerateAlgebra("no contact relation satisfies C1 when 0 = 1");
  }
  std::vector<std::uint32_t> kernel(static_cast<std::size_t>(alg.n_atoms()));
  for (int i = 0; i < alg.n_atoms(); ++i) kernel[i] = 1u << i;
  return ContactRelation{alg, std::move(kernel)};
}

ContactRelation rho_l(const FinBoolAlg& alg) {
  if (alg.n_atoms() == 0) {
    throw DegenerateAlgebra("no contact relation satisfies C1 when 0 = 1");
  }
  std::uint32_t all = (1u << alg.n_atoms()) - 1;
  std::vector<std::uint32_t> kernel(static_cast<std::size_t>(alg.n_atoms()), all);
  return ContactRelation{alg, std::move(kernel)};
}

ContactRelation kernel_to_contact(const FinBoolAlg& alg,
                                  const std::vector<std::uint32_t>& kernel) {
  if (kernel.size() != static_cast<std::size_t>(alg.n_atoms())) {
    throw ShapeMismatch("kernel must have one row per atom");
  }
  for (int i = 0; i < alg.n_atoms(); ++i) {
    if (kernel[i] >= alg.size()) {
      throw ShapeMismatch("kernel row mentions a nonexistent atom");
    }
    if (!(kernel[i] & (1u << i))) {
      throw NotReflexive("kernel row " + std::to_string(i) +
                         " misses its own atom");
    }
    for (int j = 0; j < alg.n_atoms(); ++j) {
      bool ij = kernel[i] & (1u << j);
      bool ji = kernel[j] & (1u << i);
      if (ij != ji) {
        throw NotSymmetric("kernel disagrees at atoms " + std::to_string(i) +
                           ", " + std::to_string(j));
      }
    }
  }
  return ContactRelation{alg, kernel};
}

std::vector<std::uint32_t> contact_to_kernel(const FinBoolAlg& alg,
                                             const RelTable& table) {
  if (table.size() != alg.size()) {
    throw ShapeMismatch("relation table must be total on the universe");
  }
  std::vector<std::uint32_t> kernel(static_cast<std::size_t>(alg.n_atoms()), 0);
  for (int i = 0; i < alg.n_atoms(); ++i) {
    for (int j = 0; j < alg.n_atoms(); ++j) {
      if (in_rel(table, alg.atom(i), alg.atom(j))) kernel[i] |= 1u << j;
    }
    if (!(kernel[i] & (1u << i))) {
      throw NotReflexive("relation misses contact at atom " + std::to_string(i));
    }
  }
  for (int i = 0; i < alg.n_atoms(); ++i) {
    for (int j = 0; j < i; ++j) {
      bool ij = kernel[i] & (1u << j);
      bool ji = kernel[j] & (1u << i);
      if (ij != ji) {
        throw NotSymmetric("relation not symmetric at atoms " +
                           std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }
  return kernel;
}

std::vector<std::vector<std::uint32_t>> all_kernels(const FinBoolAlg& alg) {
  const int n = alg.n_atoms();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<std::uint32_t> kernel(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) kernel[i] = 1u << i;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (bits & (std::uint64_t{1} << k)) {
        auto [i, j] = pairs[k];
        kernel[i] |= 1u << j;
        kernel[j] |= 1u << i;
      }
    }
    out.push_back(std::move(kernel));
  }
  return out;
}

// ---------------------------------------------------------------------------

UltrafilterRelation r_relation(const ContactRelation& c) {
  auto ults = ultrafilters(c.algebra);
  const int m = static_cast<int>(ults.size());
  UltrafilterRelation out;
  out.rows.assign(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // u x v within C; for principal ultrafilters the minimal elements
      // (the generating atoms) already decide it by additivity, but the
      // full product is cheap enough to check literally.
      bool rel = true;
      for (Elem a : carrier_of_elemset(c.algebra, ults[i].carrier)) {
        for (Elem b : carrier_of_elemset(c.algebra, ults[j].carrier)) {
          if (!c.contact(a, b)) {
            rel = false;
            break;
          }
        }
        if (!rel) break;
      }
      if (rel) out.rows[i] |= 1u << j;
    }
  }
  out.reflexive = out.symmetric = out.transitive = true;
  for (int i = 0; i < m; ++i) {
    if (!(out.rows[i] & (1u << i))) out.reflexive = false;
    for (int j = 0; j < m; ++j) {
      bool ij = out.rows[i] & (1u << j);
      if (ij != bool(out.rows[j] & (1u << i))) out.symmetric = false;
      if (ij) {
        // everything j reaches must be reachable from i
        if ((out.rows[j] & ~out.rows[i]) != 0) out.transitive = false;
      }
    }
  }
  return out;
}

std::optional<std::pair<Ultrafilter, Ultrafilter>> witness_contact(
    const ContactRelation& c, Elem a, Elem b) {
  auto ults = ultrafilters(c.algebra);
  auto rel = r_relation(c);
  for (std::size_t i = 0; i < ults.size(); ++i) {
    if (!(ults[i].carrier & (ElemSet{1} << a))) continue;
    for (std::size_t j = 0; j < ults.size(); ++j) {
      if (!(ults[j].carrier & (ElemSet{1} << b))) continue;
      if (rel.rows[i] & (1u << j)) return std::make_pair(ults[i], ults[j]);
    }
  }
  return std::nullopt;
}

bool is_cluster(const ContactRelation& c, Cluster sigma) {
  const FinBoolAlg& alg = c.algebra;
  if (sigma == 0) return false;
  for (Elem x = 0; x < alg.size(); ++x) {
    bool x_in = sigma & (ElemSet{1} << x);
    for (Elem y = 0; y < alg.size(); ++y) {
      bool y_in = sigma & (ElemSet{1} << y);
      if (x_in && y_in && !c.contact(x, y)) return false;  // CL1
    }
    // CL2: membership splits over joins
    for (Elem y = 0; y < alg.size(); ++y) {
      bool join_in = sigma & (ElemSet{1} << alg.join(x, y));
      bool y_in = sigma & (ElemSet{1} << y);
      if (join_in && !x_in && !y_in) return false;
    }
    // CL3: anything in contact with the whole cluster belongs to it
    if (!x_in) {
      bool touches_all = true;
      for (Elem y = 0; y < alg.size(); ++y) {
        if ((sigma & (ElemSet{1} << y)) && !c.contact(x, y)) {
          touches_all = false;
          break;
        }
      }
      if (touches_all) return false;
    }
  }
  return true;
}

std::vector<Cluster> clusters(const ContactRelation& c) {
  const FinBoolAlg& alg = c.algebra;
  if (alg.size() > 16) {
    throw BoundExceeded("cluster sweep needs at most 16 elements");
  }
  // Precompute per-element contact masks so CL1/CL3 are mask tests.
  std::vector<ElemSet> touch(alg.size(), 0);
  for (Elem x = 0; x < alg.size(); ++x) {
    for (Elem y = 0; y < alg.size(); ++y) {
      if (c.contact(x, y)) touch[x] |= ElemSet{1} << y;
    }
  }
  std::vector<Cluster> out;
  const ElemSet limit = ElemSet{1} << alg.size();
  for (ElemSet sigma = 1; sigma < limit; ++sigma) {
    bool ok = true;
    for (Elem x = 0; x < alg.size() && ok; ++x) {
      bool x_in = sigma & (ElemSet{1} << x);
      if (x_in && (sigma & ~touch[x]) != 0) ok = false;   // CL1
      if (!x_in && (sigma & ~touch[x]) == 0) ok = false;  // CL3
    }
    if (!ok) continue;
    // CL2: membership splits over joins
    for (Elem x = 0; x < alg.size() && ok; ++x) {
      for (Elem y = 0; y < alg.size(); ++y) {
        if ((sigma & (ElemSet{1} << alg.join(x, y))) &&
            !(sigma & (ElemSet{1} << x)) && !(sigma & (ElemSet{1} << y))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(sigma);
  }
  return out;
}

SigmaU sigma_u(const ContactRelation& c, const Ultrafilter& u) {
  SigmaU out{};
  const FinBoolAlg& alg = c.algebra;
  for (Elem a = 0; a < alg.size(); ++a) {
    bool touches_all = true;
    for (Elem b : carrier_of_elemset(alg, u.carrier)) {
      if (!c.contact(a, b)) {
        touches_all = false;
        break;
      }
    }
    if (touches_all) out.carrier |= ElemSet{1} << a;
  }
  out.in_theorem_scope = check_axioms(alg, c.table()).is_nca;
  out.is_cluster = is_cluster(c, out.carrier);
  return out;
}

}  // namespace finduality
