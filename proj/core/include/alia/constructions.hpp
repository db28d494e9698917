#pragma once

#include <optional>

#include "alia/residual.hpp"
#include "alia/types.hpp"

// Structure builders: special left Alia (co)algebras, dual representations,
// semidirect products, matched-pair sums, the double on A + A* with its
// natural form, and adjoints with respect to a bilinear form.

namespace alia {

/// [x, y] = x f(y) + g(x y) over a commutative associative product.
/// Throws NOT_COMM_ASSOC when the product fails those laws.
Algebra special_left_alia(const Algebra& comm_assoc, const LinearMap& f, const LinearMap& g);

/// delta(x) = x_1 (x) F(x_2) + G(x)_1 (x) G(x)_2 over a cocommutative
/// coassociative comultiplication. Throws NOT_COCOMM_COASSOC.
Coalgebra special_left_alia_coalgebra(const Coalgebra& cocomm, const LinearMap& bigF,
                                      const LinearMap& bigG);

/// (V*, ell*, ell* - r*) with the signed dual action <p*(x)u*, v> = -<u*, p(x)v>.
Representation dual_representation(const Representation& rep);

struct SemidirectResult {
  Algebra big;                   // A + V, A block first
  std::optional<LinearMap> nij;  // N + alpha when both maps were supplied
};

/// [x+u, y+v] = [x,y] + ell(x)v + r(y)u. Throws REP_INVALID unless (V, ell, r)
/// is a representation; with maps given, also requires them to form a
/// representation of (A, N).
SemidirectResult semidirect_product(const Algebra& a, const Representation& rep,
                                    const std::optional<LinearMap>& n = std::nullopt,
                                    const std::optional<LinearMap>& alpha = std::nullopt);

struct MatchedPairData {
  Algebra algA;
  Algebra algB;
  Representation repAB;  // (ell_A, r_A): A acting on B
  Representation repBA;  // (ell_B, r_B): B acting on A
  std::optional<LinearMap> nijA;
  std::optional<LinearMap> nijB;
};

struct MatchedPairResult {
  Algebra sum;                   // bracket on A + B
  std::optional<LinearMap> nij;  // N_A + N_B when both present
  bool matched;                  // the build-and-check verdict
  Residual left_alia;
  std::optional<Residual> nijenhuis;
};

/// Builds the direct-sum bracket and decides matched-pair validity by
/// checking the result (the defining equivalence), not the displayed
/// compatibility identities.
MatchedPairResult matched_pair_sum(const MatchedPairData& data);

struct DoubleBundle {
  Algebra big;                   // bracket on A + A*, A block first
  BilinearForm form;             // natural pairing, identity off-diagonal blocks
  std::optional<LinearMap> nij;  // N + S* when maps supplied
};

/// Assembles the matched-pair sum of A and A* = dual of C under the dual
/// adjoint actions, with the natural form and the block map N + S*.
/// No laws are asserted here: failing inputs must yield failing doubles.
DoubleBundle drinfeld_double(const Algebra& a, const Coalgebra& c,
                             const std::optional<LinearMap>& n = std::nullopt,
                             const std::optional<LinearMap>& s = std::nullopt);

/// Unique N^ with B(N(x), y) = B(x, N^(y)); throws DEGENERATE_FORM.
LinearMap adjoint_wrt_form(const LinearMap& nmap, const BilinearForm& b);

}  // namespace alia
