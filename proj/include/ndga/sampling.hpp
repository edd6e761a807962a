#pragma once

#include "ndga/cplx.hpp"

namespace ndga {

// mostly small coefficients, with frequent zeros so that degenerate strata get hit
inline GR sparse_gaussian(ScalarSampler& s) {
  switch (s.integer(0, 5)) {
    case 0:
    case 1: return GR(0);
    case 2: return GR(s.nonzero_rational(3, 2));
    case 3: return GR(Rational(0), s.nonzero_rational(3, 2));
    default: return s.nonzero_gaussian(3, 2);
  }
}

inline ComplexStructureEq random_eq(ScalarSampler& s) {
  for (;;) {
    ComplexStructureEq e{s.integer(0, 1) ? sparse_gaussian(s) : GR(0), sparse_gaussian(s), sparse_gaussian(s),
                         sparse_gaussian(s), sparse_gaussian(s), sparse_gaussian(s)};
    if (!e.epsilon.is_zero()) e.D = 0;
    if (!e.epsilon.is_zero() && e.d_omega3_zero()) continue;
    return e;
  }
}

inline BasisChange random_basis_change(ScalarSampler& s, const GR& epsilon) {
  for (;;) {
    BasisChange b;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (k == 2 && j < 2) continue;
        b.sigma(j, k) = s.integer(0, 2) ? s.gaussian(3, 2) : GR(0);
      }
    if (!epsilon.is_zero()) b.sigma(0, 1) = 0;
    if (!determinant(b.sigma).is_zero()) return b;
  }
}

}  // namespace ndga
