#pragma once

#include <vector>

#include "virstag/algebra.hpp"

namespace virstag {

// A pair with U1 L1 + U2 L2 = 0, both factors in positive modes; the
// common element U = U1 L1 has grade -m.
struct IntersectionElement {
  int m = 0;
  AlgebraElement<Q> u1, u2;
};

// d(m) = p(m-1) + p(m-2) - p(m).
int intersection_dim(int m);

// Basis of the intersection at grade -m, each element scaled so that its
// first nonzero coefficient (U1 before U2, partition order) is 1.
const std::vector<IntersectionElement>& intersection_basis(int m);

}  // namespace virstag
