#include "alia/dual_triangular.hpp"

#include <cassert>

#include "alia/laws.hpp"
#include "alia/yang_baxter.hpp"

namespace alia {

namespace {

void require_form(const Coalgebra& c, const BilinearForm& w) {
  if (w.dim() != c.dim) throw AliaError(Err::DimensionMismatch, "form vs comul dimension");
}

bool is_skew(const BilinearForm& w) {
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j)
      if (!(w.w.at(i, j) + w.w.at(j, i)).is_zero()) return false;
  return true;
}

bool is_antisymmetric(const TwoTensor& r) {
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j)
      if (!(r.t.at(i, j) + r.t.at(j, i)).is_zero()) return false;
  return true;
}

}  // namespace

Residual co_ybe_residual(const Coalgebra& c, const BilinearForm& w) {
  require_form(c, w);
  int n = c.dim;
  ResidualBuilder rb(LawId::CoYbe);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rat v;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            // w(x1, y) w(x2, z)
            if (!c.d.at(i, a, b).is_zero()) v += c.d.at(i, a, b) * w.w.at(a, j) * w.w.at(b, k);
            if (!c.d.at(j, a, b).is_zero()) {
              // + w(x, y2) w(y1, z) - w(x, y1) w(y2, z)
              v += c.d.at(j, a, b) * w.w.at(i, b) * w.w.at(a, k);
              v -= c.d.at(j, a, b) * w.w.at(i, a) * w.w.at(b, k);
            }
            // - w(x, z2) w(y, z1)
            if (!c.d.at(k, a, b).is_zero()) v -= c.d.at(k, a, b) * w.w.at(i, b) * w.w.at(j, a);
          }
        rb.add({i + 1, j + 1, k + 1}, v);
      }
  return rb.freeze();
}

Algebra bracket_omega_raw(const Coalgebra& c, const BilinearForm& w) {
  require_form(c, w);
  int n = c.dim;
  Algebra out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          // x2 w(x1, y) - x1 w(x2, y) - y2 w(x, y1)
          const Rat& di = c.d.at(i, a, b);
          if (!di.is_zero()) {
            out.c.at(i, j, b) += di * w.w.at(a, j);
            out.c.at(i, j, a) -= di * w.w.at(b, j);
          }
          const Rat& dj = c.d.at(j, a, b);
          if (!dj.is_zero()) out.c.at(i, j, b) -= dj * w.w.at(i, a);
        }
  return out;
}

Algebra bracket_omega(const Coalgebra& c, const BilinearForm& w) {
  require_form(c, w);
  if (!is_skew(w)) throw AliaError(Err::NotSkew, "w + tau(w) != 0");
  if (!co_ybe_residual(c, w).passed())
    throw AliaError(Err::NotCoYbeSolution, "w does not solve the co-YBE in (A, delta)");
  Algebra out = bracket_omega_raw(c, w);
  assert(check_left_alia(out).passed());
  assert(check_bialgebra_compat(out, c).passed());
  return out;
}

Residual check_prop53(const Coalgebra& c, const BilinearForm& w) {
  require_form(c, w);
  int n = c.dim;
  Algebra br = bracket_omega_raw(c, w);
  ResidualBuilder rb(LawId::Prop53);
  bool skew = is_skew(w);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // w(x, [y,z]_w) + w(x1, y) w(x2, z)
        Rat v1;
        for (int l = 0; l < n; ++l)
          if (!br.c.at(j, k, l).is_zero()) v1 += br.c.at(j, k, l) * w.w.at(i, l);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (!c.d.at(i, a, b).is_zero()) v1 += c.d.at(i, a, b) * w.w.at(a, j) * w.w.at(b, k);
        rb.add(LawId::Prop53First, {i + 1, j + 1, k + 1}, v1);
        if (skew) {
          // w([x,y]_w, z) - w(x, z1) w(y, z2)
          Rat v2;
          for (int l = 0; l < n; ++l)
            if (!br.c.at(i, j, l).is_zero()) v2 += br.c.at(i, j, l) * w.w.at(l, k);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              if (!c.d.at(k, a, b).is_zero()) v2 -= c.d.at(k, a, b) * w.w.at(i, a) * w.w.at(j, b);
          rb.add(LawId::Prop53Second, {i + 1, j + 1, k + 1}, v2);
        }
      }
  return rb.freeze();
}

BilinearForm omega_from_r(const TwoTensor& r) {
  auto tinv = inverse(r.t);
  if (!tinv) throw AliaError(Err::DegenerateR, "r# is not bijective");
  BilinearForm w;
  w.w = *tinv;  // w(x, y) = <(r#)^-1 x, y> has coefficient matrix t^-1
  return w;
}

LinearMap nijenhuis_from_symplectic(const Algebra& a, const BilinearForm& w, const TwoTensor& r) {
  if (w.dim() != a.dim || r.dim() != a.dim)
    throw AliaError(Err::DimensionMismatch, "form/tensor vs algebra dimension");
  if (!check_symplectic(a, w).passed())
    throw AliaError(Err::HypothesisFailed, "w is not a symplectic structure on (A, [,])",
                    LawId::Symplectic);
  if (!is_antisymmetric(r))
    throw AliaError(Err::HypothesisFailed, "r is not antisymmetric", LawId::Ybe);
  if (!alia_ybe_residual(a, r).passed())
    throw AliaError(Err::HypothesisFailed, "r does not solve the YBE in (A, [,])", LawId::Ybe);
  Coalgebra dr = delta_r(a, r);
  if (!co_ybe_residual(dr, w).passed())
    throw AliaError(Err::HypothesisFailed, "w does not solve the co-YBE in (A, delta_r)",
                    LawId::CoYbe);
  // N(x) = sum_i w(x, a_i) b_i; columnwise this is (w t)^T.
  LinearMap n(transpose(w.w * r.t));
  assert(check_nijenhuis_algebra(a, n).passed());
  return n;
}

LinearMap nijenhuis_coalgebra_from_cosymplectic(const Coalgebra& c, const TwoTensor& r,
                                                const BilinearForm& w) {
  if (w.dim() != c.dim || r.dim() != c.dim)
    throw AliaError(Err::DimensionMismatch, "form/tensor vs coalgebra dimension");
  if (!is_antisymmetric(r))
    throw AliaError(Err::HypothesisFailed, "r is not antisymmetric", LawId::Cosymplectic);
  if (!check_cosymplectic(c, r).passed())
    throw AliaError(Err::HypothesisFailed, "(A, delta, r) is not cosymplectic",
                    LawId::Cosymplectic);
  if (!is_skew(w)) throw AliaError(Err::HypothesisFailed, "w is not skew", LawId::CoYbe);
  if (!co_ybe_residual(c, w).passed())
    throw AliaError(Err::HypothesisFailed, "w does not solve the co-YBE in (A, delta)",
                    LawId::CoYbe);
  Algebra br = bracket_omega_raw(c, w);
  if (!alia_ybe_residual(br, r).passed())
    throw AliaError(Err::HypothesisFailed, "r does not solve the YBE in (A, [,]_w)", LawId::Ybe);
  // S(x) = sum_i a_i w(b_i, x); columnwise this is t w.
  LinearMap s(r.t * w.w);
  assert(check_nijenhuis_coalgebra(c, s).passed());
  return s;
}

}  // namespace alia
