#pragma once

#include "qsets/qset.hpp"

namespace qsets {

/// Cl_A(B): the qset of all elements of the ambient A indistinguishable
/// from some element of the core B. A quantum species touched by the
/// core blurs to its entire ambient class; classical members only match
/// themselves and pass through unchanged.
struct Cloud {
  Qset ambient;
  Qset core;
  Qset extent;
};

Cloud cloud(const Qset& ambient, const Qset& core);

/// True iff the two cloud extents share at least one element.
/// Requires both clouds to be taken relative to the same ambient.
bool clouds_intersect(const Cloud& c1, const Cloud& c2);

}  // namespace qsets
