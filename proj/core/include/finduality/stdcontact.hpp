#pragma once

#include "finduality/contact.hpp"
#include "finduality/topology.hpp"

namespace finduality {

/// The standard contact algebra (RC(X), rho_X): F rho_X G iff F meets G.
struct StandardContact {
  RCAlgebra rc;
  ContactRelation relation;  // on rc.algebra
};

StandardContact standard_contact(const FinTopSpace& space);

/// sigma_x = {F in RC(X) : x in F}, as an element-set of RC(X).
Cluster point_cluster(const RCAlgebra& rc, int x);

}  // namespace finduality
