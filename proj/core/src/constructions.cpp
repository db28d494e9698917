#include "alia/constructions.hpp"

#include <cassert>

#include "alia/laws.hpp"

namespace alia {

namespace {

LinearMap block_diag(const LinearMap& a, const LinearMap& b) {
  int n = a.rows(), m = b.rows();
  LinearMap r(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.m.at(i, j) = a.m.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r.m.at(n + i, n + j) = b.m.at(i, j);
  return r;
}

// The direct-sum bracket of a (candidate) matched pair, with no verdicts.
Algebra matched_pair_bracket(const MatchedPairData& data) {
  int na = data.algA.dim, nb = data.algB.dim;
  Algebra s(na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < na; ++k) s.c.at(i, j, k) = data.algA.c.at(i, j, k);
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b)
      for (int k = 0; k < nb; ++k) s.c.at(na + a, na + b, na + k) = data.algB.c.at(a, b, k);
  for (int i = 0; i < na; ++i)
    for (int b = 0; b < nb; ++b) {
      for (int k = 0; k < na; ++k) {
        // [e_i, f_b]|_A = r_B(f_b)(e_i),  [f_b, e_i]|_A = ell_B(f_b)(e_i)
        s.c.at(i, na + b, k) = data.repBA.arr[b].at(k, i);
        s.c.at(na + b, i, k) = data.repBA.ell[b].at(k, i);
      }
      for (int u = 0; u < nb; ++u) {
        // [e_i, f_b]|_B = ell_A(e_i)(f_b),  [f_b, e_i]|_B = r_A(e_i)(f_b)
        s.c.at(i, na + b, na + u) = data.repAB.ell[i].at(u, b);
        s.c.at(na + b, i, na + u) = data.repAB.arr[i].at(u, b);
      }
    }
  return s;
}

void require_matched_dims(const MatchedPairData& data) {
  int na = data.algA.dim, nb = data.algB.dim;
  if (data.repAB.algDim != na || data.repAB.repDim != nb || data.repBA.algDim != nb ||
      data.repBA.repDim != na)
    throw AliaError(Err::DimensionMismatch, "matched pair action dimensions are inconsistent");
  if (data.nijA.has_value() != data.nijB.has_value())
    throw AliaError(Err::DimensionMismatch, "matched pair needs both Nijenhuis maps or neither");
  if (data.nijA &&
      (data.nijA->rows() != na || data.nijA->cols() != na || data.nijB->rows() != nb ||
       data.nijB->cols() != nb))
    throw AliaError(Err::DimensionMismatch, "matched pair Nijenhuis map dimensions");
}

}  // namespace

Algebra special_left_alia(const Algebra& comm_assoc, const LinearMap& f, const LinearMap& g) {
  int n = comm_assoc.dim;
  if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n)
    throw AliaError(Err::DimensionMismatch, "maps must match the algebra dimension");
  if (!check_associative(comm_assoc).passed() || !check_commutative(comm_assoc).passed())
    throw AliaError(Err::NotCommAssoc, "product is not commutative associative");
  Algebra out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // [e_i, e_j] = e_i f(e_j) + g(e_i e_j)
      for (int b = 0; b < n; ++b) {
        const Rat& fb = f.m.at(b, j);
        if (fb.is_zero()) continue;
        for (int k = 0; k < n; ++k)
          if (!comm_assoc.c.at(i, b, k).is_zero())
            out.c.at(i, j, k) += fb * comm_assoc.c.at(i, b, k);
      }
      for (int l = 0; l < n; ++l) {
        const Rat& cl = comm_assoc.c.at(i, j, l);
        if (cl.is_zero()) continue;
        for (int k = 0; k < n; ++k)
          if (!g.m.at(k, l).is_zero()) out.c.at(i, j, k) += cl * g.m.at(k, l);
      }
    }
  assert(check_left_alia(out).passed());
  return out;
}

Coalgebra special_left_alia_coalgebra(const Coalgebra& cocomm, const LinearMap& bigF,
                                      const LinearMap& bigG) {
  int n = cocomm.dim;
  if (bigF.rows() != n || bigF.cols() != n || bigG.rows() != n || bigG.cols() != n)
    throw AliaError(Err::DimensionMismatch, "maps must match the coalgebra dimension");
  if (!check_coassociative(cocomm).passed() || !check_cocommutative(cocomm).passed())
    throw AliaError(Err::NotCocommCoassoc, "comultiplication is not cocommutative coassociative");
  Coalgebra out(n);
  for (int i = 0; i < n; ++i) {
    // x_1 (x) F(x_2)
    for (int j = 0; j < n; ++j)
      for (int b = 0; b < n; ++b) {
        const Rat& d = cocomm.d.at(i, j, b);
        if (d.is_zero()) continue;
        for (int k = 0; k < n; ++k)
          if (!bigF.m.at(k, b).is_zero()) out.d.at(i, j, k) += d * bigF.m.at(k, b);
      }
    // G(x)_1 (x) G(x)_2 = delta(G(x))
    for (int a = 0; a < n; ++a) {
      const Rat& ga = bigG.m.at(a, i);
      if (ga.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!cocomm.d.at(a, j, k).is_zero()) out.d.at(i, j, k) += ga * cocomm.d.at(a, j, k);
    }
  }
  assert(check_left_alia_coalgebra(out).passed());
  return out;
}

Representation dual_representation(const Representation& rep) {
  Representation out(rep.algDim, rep.repDim);
  for (int i = 0; i < rep.algDim; ++i) {
    Mat ellT = transpose(rep.ell[i]);
    out.ell[i] = Rat(-1) * ellT;                          // ell* = -ell^T
    out.arr[i] = Rat(-1) * ellT + transpose(rep.arr[i]);  // ell* - r* = -ell^T + r^T
  }
  return out;
}

SemidirectResult semidirect_product(const Algebra& a, const Representation& rep,
                                    const std::optional<LinearMap>& n,
                                    const std::optional<LinearMap>& alpha) {
  if (!check_representation(a, rep).passed())
    throw AliaError(Err::RepInvalid, "(V, ell, r) is not a representation");
  if (n.has_value() != alpha.has_value())
    throw AliaError(Err::DimensionMismatch, "semidirect product needs both N and alpha or neither");
  int na = a.dim, nv = rep.repDim;
  SemidirectResult out;
  out.big = Algebra(na + nv);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < na; ++k) out.big.c.at(i, j, k) = a.c.at(i, j, k);
  for (int i = 0; i < na; ++i)
    for (int b = 0; b < nv; ++b)
      for (int u = 0; u < nv; ++u) {
        // [e_i, v_b] = ell(e_i) v_b, [v_b, e_i] = r(e_i) v_b
        out.big.c.at(i, na + b, na + u) = rep.ell[i].at(u, b);
        out.big.c.at(na + b, i, na + u) = rep.arr[i].at(u, b);
      }
  if (n) {
    if (!check_nijenhuis_representation(a, *n, rep, *alpha).passed())
      throw AliaError(Err::RepInvalid, "(V, ell, r, alpha) is not a representation of (A, N)");
    out.nij = block_diag(*n, *alpha);
  }
  return out;
}

MatchedPairResult matched_pair_sum(const MatchedPairData& data) {
  require_matched_dims(data);
  MatchedPairResult out;
  out.sum = matched_pair_bracket(data);
  out.left_alia = check_left_alia(out.sum);
  out.matched = out.left_alia.passed();
  if (data.nijA) {
    out.nij = block_diag(*data.nijA, *data.nijB);
    out.nijenhuis = check_nijenhuis_algebra(out.sum, *out.nij);
    out.matched = out.matched && out.nijenhuis->passed();
  }
  return out;
}

DoubleBundle drinfeld_double(const Algebra& a, const Coalgebra& c,
                             const std::optional<LinearMap>& n,
                             const std::optional<LinearMap>& s) {
  if (a.dim != c.dim) throw AliaError(Err::DimensionMismatch, "bracket vs comul dimension");
  if (n.has_value() != s.has_value())
    throw AliaError(Err::DimensionMismatch, "double needs both N and S or neither");
  int nd = a.dim;
  Algebra dual = dualize_coalgebra(c);

  MatchedPairData mp;
  mp.algA = a;
  mp.algB = dual;
  mp.repAB = dual_representation(left_right_operators(a));
  mp.repBA = dual_representation(left_right_operators(dual));
  require_matched_dims(mp);

  DoubleBundle out;
  out.big = matched_pair_bracket(mp);
  out.form = BilinearForm(2 * nd);
  for (int i = 0; i < nd; ++i) {
    out.form.w.at(i, nd + i) = Rat(1);
    out.form.w.at(nd + i, i) = Rat(1);
  }
  if (n) {
    if (n->rows() != nd || n->cols() != nd || s->rows() != nd || s->cols() != nd)
      throw AliaError(Err::DimensionMismatch, "N and S must match the algebra dimension");
    out.nij = block_diag(*n, dual_map(*s));
  }
  return out;
}

LinearMap adjoint_wrt_form(const LinearMap& nmap, const BilinearForm& b) {
  int n = b.dim();
  if (nmap.rows() != n || nmap.cols() != n)
    throw AliaError(Err::DimensionMismatch, "map vs form dimension");
  auto binv = inverse(b.w);
  if (!binv) throw AliaError(Err::DegenerateForm, "bilinear form has rank < dim");
  // B(N(x), y) = B(x, N^(y))  <=>  N^T W = W N^  <=>  N^ = W^-1 N^T W
  return LinearMap(*binv * transpose(nmap.m) * b.w);
}

}  // namespace alia
