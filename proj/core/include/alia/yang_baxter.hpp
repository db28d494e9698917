#pragma once

#include <optional>

#include "alia/residual.hpp"
#include "alia/types.hpp"

// Yang-Baxter machinery: the YBE residual, the induced comultiplication,
// S-admissibility, the coupled operator identities, r as a map, relative
// Rota-Baxter operators, and the lift of an operator to a two-tensor on the
// dual semidirect product.

namespace alia {

/// Al(r) as a rank-3 residual over the canonical decomposition of r.
Residual alia_ybe_residual(const Algebra& a, const TwoTensor& r);

/// delta_r(x) = sum_i ([a_i, x] - [x, a_i]) (x) b_i - a_i (x) [b_i, x].
Coalgebra delta_r(const Algebra& a, const TwoTensor& r);

/// The two contraction identities equivalent to the YBE (the second only
/// applies when r is antisymmetric).
Residual check_prop33(const Algebra& a, const TwoTensor& r);

/// (S (x) id - id (x) N)(r) as a matrix residual.
Residual s_admissibility_residual(const TwoTensor& r, const LinearMap& n, const LinearMap& s);

/// The three operator identities coupling (N, S) with r, each built from
/// explicit n^2 x n^2 operators acting on vectorized tensors.
/// Requires S adjoint-admissible to (A, N) (throws NOT_ADJOINT_ADMISSIBLE).
Residual check_prop37(const Algebra& a, const LinearMap& n, const LinearMap& s,
                      const TwoTensor& r);

/// r as a map A* -> A; matrix is the transpose of the coefficient matrix.
LinearMap r_sharp(const TwoTensor& r);

/// [T(u), T(v)] - T(ell(T(u))v + r(T(v))u) per basis pair of V.
/// T maps V into A (an A.dim x repDim matrix). Throws REP_INVALID.
Residual check_relative_rota_baxter(const Algebra& a, const Representation& rep,
                                    const LinearMap& t);

/// Relative Rota-Baxter residual plus the linking identity N T = T alpha.
Residual check_weak_rrb(const Algebra& a, const LinearMap& n, const Representation& rep,
                        const LinearMap& alpha, const LinearMap& t);

struct TSharpLift {
  Algebra big;                   // A + V* under the dual action
  TwoTensor r;                   // T# - tau(T#)
  std::optional<LinearMap> nij;  // N + beta*
  std::optional<LinearMap> adm;  // S + alpha*
};

/// Embeds T: V -> A as an antisymmetric two-tensor on A + V*.
TSharpLift t_sharp_lift(const Algebra& a, const Representation& rep, const LinearMap& t,
                        const std::optional<LinearMap>& s = std::nullopt,
                        const std::optional<LinearMap>& alpha = std::nullopt,
                        const std::optional<LinearMap>& beta = std::nullopt,
                        const std::optional<LinearMap>& n = std::nullopt);

/// The two endomorphism identities tying (S, alpha, beta) to (ell, r).
Residual check_thm_bn_conditions(const Algebra& a, const LinearMap& n, const Representation& rep,
                                 const LinearMap& s, const LinearMap& alpha,
                                 const LinearMap& beta);

}  // namespace alia
