#pragma once

#include "alia/residual.hpp"
#include "alia/types.hpp"

// Dual-triangular machinery: the co-Yang-Baxter equation, the bracket a
// skew form induces on a coalgebra, symplectic/cosymplectic structures, and
// the constructions turning them into Nijenhuis operators.

namespace alia {

/// w(x1,y)w(x2,z) + w(x,y2)w(y1,z) - w(x,y1)w(y2,z) - w(x,z2)w(y,z1)
/// per basis triple.
Residual co_ybe_residual(const Coalgebra& c, const BilinearForm& w);

/// [x, y]_w = x2 w(x1,y) - x1 w(x2,y) - y2 w(x,y1), with no hypothesis gate.
Algebra bracket_omega_raw(const Coalgebra& c, const BilinearForm& w);

/// Gated version: requires w skew (NOT_SKEW) and a co-YBE solution
/// (NOT_CO_YBE_SOLUTION).
Algebra bracket_omega(const Coalgebra& c, const BilinearForm& w);

/// The two pairing identities equivalent to the co-YBE (the second only
/// when w is skew); both are evaluated against bracket_omega_raw.
Residual check_prop53(const Coalgebra& c, const BilinearForm& w);

/// w_r(x, y) = <(r#)^-1 x, y>; requires r# bijective (DEGENERATE_R).
BilinearForm omega_from_r(const TwoTensor& r);

/// N(x) = sum_i w(x, a_i) b_i under the triangular + dual-triangular
/// hypotheses; the Nijenhuis conclusion is asserted in debug builds.
/// Throws HYPOTHESIS_FAILED naming the first failing hypothesis.
LinearMap nijenhuis_from_symplectic(const Algebra& a, const BilinearForm& w, const TwoTensor& r);

/// S(x) = sum_i a_i w(b_i, x), dual to the above.
LinearMap nijenhuis_coalgebra_from_cosymplectic(const Coalgebra& c, const TwoTensor& r,
                                                const BilinearForm& w);

}  // namespace alia
