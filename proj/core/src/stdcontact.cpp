#include "finduality/stdcontact.hpp"

namespace finduality {

StandardContact standard_contact(const FinTopSpace& space) {
  RCAlgebra rc = rc_algebra(space);
  const int n = rc.algebra.n_atoms();
  if (n == 0) {
    throw DegenerateAlgebra("the empty space has a degenerate RC algebra");
  }
  // Joins in RC(X) are plain unions, so rho_X is determined by which
  // minimal regular closed sets intersect.
  std::vector<std::uint32_t> kernel(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rc.set_of(rc.algebra.atom(i)) & rc.set_of(rc.algebra.atom(j))) {
        kernel[i] |= 1u << j;
      }
    }
  }
  ContactRelation relation = kernel_to_contact(rc.algebra, kernel);
  // Sanity: the kernel form must reproduce the set-intersection relation.
  for (Elem a = 0; a < rc.algebra.size(); ++a) {
    for (Elem b = 0; b < rc.algebra.size(); ++b) {
      bool meets = (rc.set_of(a) & rc.set_of(b)) != 0;
      if (meets != relation.contact(a, b)) {
        throw InternalContradiction("rho_X is not additive over RC atoms");
      }
    }
  }
  return StandardContact{std::move(rc), std::move(relation)};
}

Cluster point_cluster(const RCAlgebra& rc, int x) {
  if (x < 0 || x >= rc.space.n_points()) {
    throw ShapeMismatch("point outside the space");
  }
  Cluster sigma = 0;
  for (Elem a = 0; a < rc.algebra.size(); ++a) {
    if (rc.set_of(a) & (PointSet{1} << x)) sigma |= ElemSet{1} << a;
  }
  return sigma;
}

}  // namespace finduality
