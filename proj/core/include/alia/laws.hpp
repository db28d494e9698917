#pragma once

#include "alia/residual.hpp"
#include "alia/types.hpp"

// Exact residual evaluation. Every check returns the full list of nonzero
// coordinates of (LHS - RHS) over all basis tuples; a law holds iff the
// residual is empty. No tolerances anywhere.

namespace alia {

/// Symmetric Jacobi identity.
Residual check_left_alia(const Algebra& a);

Residual check_associative(const Algebra& a);
Residual check_commutative(const Algebra& a);
Residual check_coassociative(const Coalgebra& c);
Residual check_cocommutative(const Coalgebra& c);

/// N(x)N(y) + N^2(xy) - N(N(x)y) - N(xN(y)) over the stored product.
Residual check_nijenhuis_algebra(const Algebra& a, const LinearMap& n);

Residual check_left_alia_coalgebra(const Coalgebra& c);

/// Coalgebra Nijenhuis identity for S against delta.
Residual check_nijenhuis_coalgebra(const Coalgebra& c, const LinearMap& s);

/// ell([x,y]) - ell([y,x]) = r(x)(r(y)-ell(y)) - r(y)(r(x)-ell(x)).
Residual check_representation(const Algebra& a, const Representation& rep);

/// The two representation identities coupling N with alpha.
/// Re-verifies the plain representation law first (throws REP_INVALID).
Residual check_nijenhuis_representation(const Algebra& a, const LinearMap& n,
                                        const Representation& rep, const LinearMap& alpha);

/// Admissibility of beta to (A, N) with respect to (V, ell, r).
Residual check_admissible(const Algebra& a, const LinearMap& n, const Representation& rep,
                          const LinearMap& beta);

/// S adjoint-admissible to (A, N): the two bracket identities.
Residual check_adjoint_admissible(const Algebra& a, const LinearMap& n, const LinearMap& s);

/// Dual statement on the coalgebra side, in terms of delta.
Residual check_coadjoint_admissible(const Coalgebra& c, const LinearMap& s, const LinearMap& n);

/// Bialgebra compatibility between the bracket and the comultiplication.
Residual check_bialgebra_compat(const Algebra& a, const Coalgebra& c);

/// All five defining conditions of a Nijenhuis left Alia bialgebra; entries
/// are tagged with the failing sub-law and every item is evaluated even
/// after earlier failures.
Residual check_nijenhuis_left_alia_bialgebra(const Algebra& a, const Coalgebra& c,
                                             const LinearMap& n, const LinearMap& s);

/// Symmetric, nondegenerate, invariant bilinear form.
Residual check_quadratic(const Algebra& a, const BilinearForm& b);

/// Skew-symmetric form with the symplectic identity (no nondegeneracy).
Residual check_symplectic(const Algebra& a, const BilinearForm& w);

/// Cosymplectic identity for an antisymmetric two-tensor (throws
/// NOT_ANTISYMMETRIC otherwise).
Residual check_cosymplectic(const Coalgebra& c, const TwoTensor& r);

/// Commutative cocommutative associative D-bialgebra conditions.
Residual check_d_bialgebra(const Algebra& a, const Coalgebra& c);

/// Nijenhuis compatibility of (f, F) with a D-bialgebra.
Residual check_nijenhuis_d_compat(const Algebra& a, const Coalgebra& c, const LinearMap& f,
                                  const LinearMap& bigF);

/// The sixteen-term condition making a special pair into a bialgebra.
/// Re-verifies the D-bialgebra laws first (throws D_BIALGEBRA_INVALID).
Residual check_special_bialgebra_condition(const Algebra& a, const Coalgebra& c,
                                           const LinearMap& f, const LinearMap& g,
                                           const LinearMap& bigF, const LinearMap& bigG);

}  // namespace alia
