#include "alia/yang_baxter.hpp"

#include "alia/constructions.hpp"
#include "alia/laws.hpp"

namespace alia {

namespace {

void require_tensor(const Algebra& a, const TwoTensor& r) {
  if (r.dim() != a.dim) throw AliaError(Err::DimensionMismatch, "tensor vs algebra dimension");
}

void emit_ten3(ResidualBuilder& rb, LawId part, const Ten3& t) {
  for (int i = 0; i < t.dim0(); ++i)
    for (int j = 0; j < t.dim1(); ++j)
      for (int k = 0; k < t.dim2(); ++k) rb.add(part, {i + 1, j + 1, k + 1}, t.at(i, j, k));
}

}  // namespace

Residual alia_ybe_residual(const Algebra& a, const TwoTensor& r) {
  require_tensor(a, r);
  int n = a.dim;
  Ten3 acc(n, n, n);
  for (int u1 = 0; u1 < n; ++u1)
    for (int v1 = 0; v1 < n; ++v1) {
      const Rat& c1 = r.t.at(u1, v1);
      if (c1.is_zero()) continue;
      for (int u2 = 0; u2 < n; ++u2)
        for (int v2 = 0; v2 < n; ++v2) {
          const Rat& c2 = r.t.at(u2, v2);
          if (c2.is_zero()) continue;
          Rat cf = c1 * c2;
          for (int l = 0; l < n; ++l) {
            // [a_i, a_j] (x) b_i (x) b_j
            if (!a.c.at(u1, u2, l).is_zero()) acc.at(l, v1, v2) += cf * a.c.at(u1, u2, l);
            // a_i (x) ([a_j, b_i] - [b_i, a_j]) (x) b_j
            Rat mid = a.c.at(u2, v1, l) - a.c.at(v1, u2, l);
            if (!mid.is_zero()) acc.at(u1, l, v2) += cf * mid;
            // - a_i (x) a_j (x) [b_j, b_i]
            if (!a.c.at(v2, v1, l).is_zero()) acc.at(u1, u2, l) -= cf * a.c.at(v2, v1, l);
          }
        }
    }
  ResidualBuilder rb(LawId::Ybe);
  emit_ten3(rb, LawId::Ybe, acc);
  return rb.freeze();
}

Coalgebra delta_r(const Algebra& a, const TwoTensor& r) {
  require_tensor(a, r);
  int n = a.dim;
  Coalgebra out(n);
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const Rat& tuv = r.t.at(u, v);
        if (tuv.is_zero()) continue;
        for (int l = 0; l < n; ++l) {
          // ([a_i, x] - [x, a_i]) (x) b_i
          Rat cf = a.c.at(u, x, l) - a.c.at(x, u, l);
          if (!cf.is_zero()) out.d.at(x, l, v) += tuv * cf;
          // - a_i (x) [b_i, x]
          if (!a.c.at(v, x, l).is_zero()) out.d.at(x, u, l) -= tuv * a.c.at(v, x, l);
        }
      }
  return out;
}

Residual check_prop33(const Algebra& a, const TwoTensor& r) {
  require_tensor(a, r);
  int n = a.dim;
  Coalgebra dr = delta_r(a, r);
  bool antisym = true;
  for (int i = 0; i < n && antisym; ++i)
    for (int j = 0; j < n; ++j)
      if (!(r.t.at(i, j) + r.t.at(j, i)).is_zero()) { antisym = false; break; }

  // (id (x) delta_r)(r) + sum [a_i, a_j] (x) b_i (x) b_j
  Ten3 first(n, n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const Rat& tuv = r.t.at(u, v);
      if (tuv.is_zero()) continue;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (!dr.d.at(v, p, q).is_zero()) first.at(u, p, q) += tuv * dr.d.at(v, p, q);
    }
  for (int u1 = 0; u1 < n; ++u1)
    for (int v1 = 0; v1 < n; ++v1) {
      const Rat& c1 = r.t.at(u1, v1);
      if (c1.is_zero()) continue;
      for (int u2 = 0; u2 < n; ++u2)
        for (int v2 = 0; v2 < n; ++v2) {
          const Rat& c2 = r.t.at(u2, v2);
          if (c2.is_zero()) continue;
          for (int l = 0; l < n; ++l)
            if (!a.c.at(u1, u2, l).is_zero())
              first.at(l, v1, v2) += c1 * c2 * a.c.at(u1, u2, l);
        }
    }
  ResidualBuilder rb(LawId::Prop33);
  emit_ten3(rb, LawId::Prop33First, first);

  if (antisym) {
    // (delta_r (x) id)(r) - sum a_i (x) a_j (x) [b_i, b_j]
    Ten3 second(n, n, n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const Rat& tuv = r.t.at(u, v);
        if (tuv.is_zero()) continue;
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            if (!dr.d.at(u, p, q).is_zero()) second.at(p, q, v) += tuv * dr.d.at(u, p, q);
      }
    for (int u1 = 0; u1 < n; ++u1)
      for (int v1 = 0; v1 < n; ++v1) {
        const Rat& c1 = r.t.at(u1, v1);
        if (c1.is_zero()) continue;
        for (int u2 = 0; u2 < n; ++u2)
          for (int v2 = 0; v2 < n; ++v2) {
            const Rat& c2 = r.t.at(u2, v2);
            if (c2.is_zero()) continue;
            for (int l = 0; l < n; ++l)
              if (!a.c.at(v1, v2, l).is_zero())
                second.at(u1, u2, l) -= c1 * c2 * a.c.at(v1, v2, l);
          }
      }
    emit_ten3(rb, LawId::Prop33Second, second);
  }
  return rb.freeze();
}

Residual s_admissibility_residual(const TwoTensor& r, const LinearMap& n, const LinearMap& s) {
  int nd = r.dim();
  if (n.rows() != nd || n.cols() != nd || s.rows() != nd || s.cols() != nd)
    throw AliaError(Err::DimensionMismatch, "map vs tensor dimension");
  Mat res = s.m * r.t - r.t * transpose(n.m);  // (S (x) id - id (x) N)(r)
  ResidualBuilder rb(LawId::SAdmissible);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j) rb.add({i + 1, j + 1}, res.at(i, j));
  return rb.freeze();
}

Residual check_prop37(const Algebra& a, const LinearMap& n, const LinearMap& s,
                      const TwoTensor& r) {
  require_tensor(a, r);
  if (!check_adjoint_admissible(a, n, s).passed())
    throw AliaError(Err::NotAdjointAdmissible, "S is not adjoint-admissible to (A, N)");
  int nd = a.dim;
  Mat id = Mat::identity(nd);
  Mat n2 = n.m * n.m;
  Mat s2 = s.m * s.m;
  // vectorized arguments
  Vec vr = vectorize(r.t);
  Vec w_ns = vectorize(n.m * r.t - r.t * transpose(s.m));  // (N (x) id - id (x) S)(r)
  Vec w_sn = vectorize(s.m * r.t - r.t * transpose(n.m));  // (S (x) id - id (x) N)(r)

  ResidualBuilder rb(LawId::Prop37);
  auto emit_vec = [&](LawId part, int x, const Vec& val) {
    for (int j = 0; j < nd; ++j)
      for (int k = 0; k < nd; ++k)
        rb.add(part, {x + 1, j + 1, k + 1}, val[size_t(j) * nd + k]);
  };
  for (int x = 0; x < nd; ++x) {
    Mat lx = left_mult(a, x), rx = right_mult(a, x);
    Mat lnx(nd, nd), rnx(nd, nd), lsx(nd, nd), rsx(nd, nd);
    for (int k = 0; k < nd; ++k) {
      if (!n.m.at(k, x).is_zero()) {
        lnx += n.m.at(k, x) * left_mult(a, k);
        rnx += n.m.at(k, x) * right_mult(a, k);
      }
      if (!s.m.at(k, x).is_zero()) {
        lsx += s.m.at(k, x) * left_mult(a, k);
        rsx += s.m.at(k, x) * right_mult(a, k);
      }
    }
    // ((R(Sx) - L(Sx)) (x) id - S(R(x) - L(x)) (x) id)(N (x) id - id (x) S)(r)
    //   + (id (x) R(Sx) - id (x) S R(x))(S (x) id - id (x) N)(r)
    {
      Vec val = mat_apply(kron(rsx - lsx - s.m * (rx - lx), id), w_ns);
      Vec val2 = mat_apply(kron(id, rsx - s.m * rx), w_sn);
      for (size_t t = 0; t < val.size(); ++t) val[t] += val2[t];
      emit_vec(LawId::Prop37Eq1, x, val);
    }
    // (id (x) (N R(x) - R(Nx)) + (R(Nx) - L(Nx)) (x) id + S(R(x) - L(x)) (x) id)
    //   (S (x) id - id (x) N)(r) + ((L(x) - R(x)) S^2 (x) id + (R(x) - L(x)) (x) N^2)(r)
    {
      Vec val = mat_apply(kron(id, n.m * rx - rnx) + kron(rnx - lnx + s.m * (rx - lx), id), w_sn);
      Vec val2 = mat_apply(kron((lx - rx) * s2, id) + kron(rx - lx, n2), vr);
      for (size_t t = 0; t < val.size(); ++t) val[t] += val2[t];
      emit_vec(LawId::Prop37Eq2, x, val);
    }
    // ((N(R(x) - L(x)) - (R(Nx) - L(Nx))) (x) id + id (x) (R(Nx) + S R(x)))
    //   (N (x) id - id (x) S)(r) + (id (x) R(x) S^2 - N^2 (x) R(x))(r)
    {
      Vec val = mat_apply(kron(n.m * (rx - lx) - (rnx - lnx), id) + kron(id, rnx + s.m * rx), w_ns);
      Vec val2 = mat_apply(kron(id, rx * s2) - kron(n2, rx), vr);
      for (size_t t = 0; t < val.size(); ++t) val[t] += val2[t];
      emit_vec(LawId::Prop37Eq3, x, val);
    }
  }
  return rb.freeze();
}

LinearMap r_sharp(const TwoTensor& r) { return LinearMap(transpose(r.t)); }

Residual check_relative_rota_baxter(const Algebra& a, const Representation& rep,
                                    const LinearMap& t) {
  if (!check_representation(a, rep).passed())
    throw AliaError(Err::RepInvalid, "(V, ell, r) is not a representation");
  if (t.rows() != a.dim || t.cols() != rep.repDim)
    throw AliaError(Err::DimensionMismatch, "T must map V into A");
  int m = rep.repDim;
  ResidualBuilder rb(LawId::RelativeRotaBaxter);
  for (int u = 0; u < m; ++u) {
    Vec tu(a.dim);
    for (int i = 0; i < a.dim; ++i) tu[i] = t.m.at(i, u);
    Mat ell_tu(m, m);
    for (int k = 0; k < a.dim; ++k)
      if (!t.m.at(k, u).is_zero()) ell_tu += t.m.at(k, u) * rep.ell[k];
    for (int v = 0; v < m; ++v) {
      Vec tv(a.dim);
      for (int i = 0; i < a.dim; ++i) tv[i] = t.m.at(i, v);
      Mat arr_tv(m, m);
      for (int k = 0; k < a.dim; ++k)
        if (!t.m.at(k, v).is_zero()) arr_tv += t.m.at(k, v) * rep.arr[k];
      // [T(u), T(v)] - T(ell(T(u))v + r(T(v))u)
      Vec lhs = bracket_eval(a, tu, tv);
      Vec inner(m);
      for (int i = 0; i < m; ++i) inner[i] = ell_tu.at(i, v) + arr_tv.at(i, u);
      Vec rhs = mat_apply(t.m, inner);
      for (int l = 0; l < a.dim; ++l)
        rb.add({u + 1, v + 1, l + 1}, lhs[l] - rhs[l]);
    }
  }
  return rb.freeze();
}

Residual check_weak_rrb(const Algebra& a, const LinearMap& n, const Representation& rep,
                        const LinearMap& alpha, const LinearMap& t) {
  if (n.rows() != a.dim || n.cols() != a.dim || alpha.rows() != rep.repDim ||
      alpha.cols() != rep.repDim)
    throw AliaError(Err::DimensionMismatch, "map dimensions");
  ResidualBuilder rb(LawId::WeakRRB);
  rb.merge(check_relative_rota_baxter(a, rep, t));
  Mat link = n.m * t.m - t.m * alpha.m;  // N T - T alpha
  for (int i = 0; i < link.rows(); ++i)
    for (int j = 0; j < link.cols(); ++j)
      rb.add(LawId::WeakRRBLink, {i + 1, j + 1}, link.at(i, j));
  return rb.freeze();
}

TSharpLift t_sharp_lift(const Algebra& a, const Representation& rep, const LinearMap& t,
                        const std::optional<LinearMap>& s, const std::optional<LinearMap>& alpha,
                        const std::optional<LinearMap>& beta, const std::optional<LinearMap>& n) {
  if (t.rows() != a.dim || t.cols() != rep.repDim)
    throw AliaError(Err::DimensionMismatch, "T must map V into A");
  int na = a.dim, nv = rep.repDim;
  TSharpLift out;
  out.big = semidirect_product(a, dual_representation(rep)).big;
  // T# = sum_i e_i* (x) T(e_i), with V* indices after the A block
  Mat tsharp(na + nv, na + nv);
  for (int i = 0; i < nv; ++i)
    for (int k = 0; k < na; ++k) tsharp.at(na + i, k) = t.m.at(k, i);
  out.r = TwoTensor(na + nv);
  out.r.t = tsharp - transpose(tsharp);
  bool have_maps = s && alpha && beta && n;
  if (s || alpha || beta || n) {
    if (!have_maps)
      throw AliaError(Err::DimensionMismatch, "t_sharp_lift needs all of S, alpha, beta, N");
    if (n->rows() != na || s->rows() != na || alpha->rows() != nv || beta->rows() != nv)
      throw AliaError(Err::DimensionMismatch, "lift map dimensions");
    LinearMap nb(na + nv), sb(na + nv);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) {
        nb.m.at(i, j) = n->m.at(i, j);
        sb.m.at(i, j) = s->m.at(i, j);
      }
    Mat bt = transpose(beta->m), at = transpose(alpha->m);
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) {
        nb.m.at(na + i, na + j) = bt.at(i, j);  // N + beta*
        sb.m.at(na + i, na + j) = at.at(i, j);  // S + alpha*
      }
    out.nij = nb;
    out.adm = sb;
  }
  return out;
}

Residual check_thm_bn_conditions(const Algebra& a, const LinearMap& n, const Representation& rep,
                                 const LinearMap& s, const LinearMap& alpha,
                                 const LinearMap& beta) {
  if (rep.algDim != a.dim || n.rows() != a.dim || s.rows() != a.dim ||
      alpha.rows() != rep.repDim || beta.rows() != rep.repDim)
    throw AliaError(Err::DimensionMismatch, "map dimensions");
  int nd = a.dim, m = rep.repDim;
  Mat s2 = s.m * s.m;
  ResidualBuilder rb(LawId::ThmBn);
  for (int x = 0; x < nd; ++x) {
    Mat rsx(m, m), rs2x(m, m), lsx(m, m), ls2x(m, m);
    for (int k = 0; k < nd; ++k) {
      if (!s.m.at(k, x).is_zero()) {
        rsx += s.m.at(k, x) * rep.arr[k];
        lsx += s.m.at(k, x) * rep.ell[k];
      }
      if (!s2.at(k, x).is_zero()) {
        rs2x += s2.at(k, x) * rep.arr[k];
        ls2x += s2.at(k, x) * rep.ell[k];
      }
    }
    // beta r(x) alpha + r(S^2 x) - r(Sx) alpha - beta r(Sx)
    Mat r1 = beta.m * rep.arr[x] * alpha.m + rs2x - rsx * alpha.m - beta.m * rsx;
    // beta ell(x) alpha + ell(S^2 x) - ell(Sx) alpha - beta ell(Sx)
    Mat r2 = beta.m * rep.ell[x] * alpha.m + ls2x - lsx * alpha.m - beta.m * lsx;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        rb.add(LawId::ThmBnArr, {x + 1, i + 1, j + 1}, r1.at(i, j));
        rb.add(LawId::ThmBnEll, {x + 1, i + 1, j + 1}, r2.at(i, j));
      }
  }
  return rb.freeze();
}

}  // namespace alia
