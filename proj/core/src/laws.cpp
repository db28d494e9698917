#include "alia/laws.hpp"

#include <functional>

#include "alia/parallel.hpp"

namespace alia {

namespace {

using Entries = std::vector<ResidualEntry>;

void emit(Entries& out, LawId part, std::vector<int> idx, Rat v) {
  if (!v.is_zero()) out.push_back(ResidualEntry{part, std::move(idx), std::move(v)});
}

/// Evaluates one slice per outer basis index, merging slices in index order.
Residual collect(LawId law, int n, const std::function<void(int, Entries&)>& slice) {
  std::vector<Entries> buf(n);
  parallel_for(n, [&](int i) { slice(i, buf[i]); });
  ResidualBuilder rb(law);
  for (auto& es : buf)
    for (auto& e : es) rb.add(e.part, std::move(e.index), std::move(e.value));
  return rb.freeze();
}

void require_square_map(const LinearMap& f, int dim, const char* what) {
  if (f.rows() != dim || f.cols() != dim)
    throw AliaError(Err::DimensionMismatch, std::string(what) + " must be " +
                                                std::to_string(dim) + "x" + std::to_string(dim));
}

void require_rep(const Algebra& a, const Representation& rep) {
  if (rep.algDim != a.dim)
    throw AliaError(Err::DimensionMismatch, "representation algebra dimension mismatch");
  if (int(rep.ell.size()) != rep.algDim || int(rep.arr.size()) != rep.algDim)
    throw AliaError(Err::DimensionMismatch, "representation matrix count mismatch");
  for (int i = 0; i < rep.algDim; ++i)
    if (rep.ell[i].rows() != rep.repDim || rep.ell[i].cols() != rep.repDim ||
        rep.arr[i].rows() != rep.repDim || rep.arr[i].cols() != rep.repDim)
      throw AliaError(Err::DimensionMismatch, "representation matrix shape mismatch");
}

// [[e_i, e_j], e_k] as a coefficient vector.
Vec bb(const Algebra& a, int i, int j, int k) {
  Vec r(a.dim);
  for (int l = 0; l < a.dim; ++l) {
    const Rat& cl = a.c.at(i, j, l);
    if (cl.is_zero()) continue;
    for (int m = 0; m < a.dim; ++m)
      if (!a.c.at(l, k, m).is_zero()) r[m] += cl * a.c.at(l, k, m);
  }
  return r;
}

// delta(e_i) as a coefficient matrix.
Mat comul_basis(const Coalgebra& c, int i) {
  Mat m(c.dim, c.dim);
  for (int j = 0; j < c.dim; ++j)
    for (int k = 0; k < c.dim; ++k) m.at(j, k) = c.d.at(i, j, k);
  return m;
}

// delta(f(e_i)).
Mat comul_of_image(const Coalgebra& c, const LinearMap& f, int i) {
  Mat m(c.dim, c.dim);
  for (int a = 0; a < c.dim; ++a) {
    if (f.m.at(a, i).is_zero()) continue;
    for (int j = 0; j < c.dim; ++j)
      for (int k = 0; k < c.dim; ++k)
        if (!c.d.at(a, j, k).is_zero()) m.at(j, k) += f.m.at(a, i) * c.d.at(a, j, k);
  }
  return m;
}

Vec map_col(const LinearMap& f, int j) {
  Vec v(f.rows());
  for (int i = 0; i < f.rows(); ++i) v[i] = f.m.at(i, j);
  return v;
}

void emit_mat(Entries& out, LawId part, int i, int j, const Mat& m) {
  for (int u = 0; u < m.rows(); ++u)
    for (int v = 0; v < m.cols(); ++v)
      emit(out, part, {i + 1, j + 1, u + 1, v + 1}, m.at(u, v));
}

void emit_mat1(Entries& out, LawId part, int i, const Mat& m) {
  for (int u = 0; u < m.rows(); ++u)
    for (int v = 0; v < m.cols(); ++v) emit(out, part, {i + 1, u + 1, v + 1}, m.at(u, v));
}

}  // namespace

Residual check_left_alia(const Algebra& a) {
  int n = a.dim;
  return collect(LawId::LeftAlia, n, [&](int i, Entries& out) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec r(n);
        Vec t;
        t = bb(a, i, j, k); for (int l = 0; l < n; ++l) r[l] += t[l];
        t = bb(a, j, k, i); for (int l = 0; l < n; ++l) r[l] += t[l];
        t = bb(a, k, i, j); for (int l = 0; l < n; ++l) r[l] += t[l];
        t = bb(a, j, i, k); for (int l = 0; l < n; ++l) r[l] -= t[l];
        t = bb(a, k, j, i); for (int l = 0; l < n; ++l) r[l] -= t[l];
        t = bb(a, i, k, j); for (int l = 0; l < n; ++l) r[l] -= t[l];
        for (int l = 0; l < n; ++l)
          emit(out, LawId::LeftAlia, {i + 1, j + 1, k + 1, l + 1}, r[l]);
      }
  });
}

Residual check_associative(const Algebra& a) {
  int n = a.dim;
  return collect(LawId::Associative, n, [&](int i, Entries& out) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec left = bb(a, i, j, k);  // (e_i e_j) e_k
        Vec right(n);               // e_i (e_j e_k)
        for (int l = 0; l < n; ++l) {
          const Rat& cl = a.c.at(j, k, l);
          if (cl.is_zero()) continue;
          for (int m = 0; m < n; ++m)
            if (!a.c.at(i, l, m).is_zero()) right[m] += cl * a.c.at(i, l, m);
        }
        for (int l = 0; l < n; ++l)
          emit(out, LawId::Associative, {i + 1, j + 1, k + 1, l + 1}, left[l] - right[l]);
      }
  });
}

Residual check_commutative(const Algebra& a) {
  int n = a.dim;
  ResidualBuilder rb(LawId::Commutative);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        rb.add({i + 1, j + 1, k + 1}, a.c.at(i, j, k) - a.c.at(j, i, k));
  return rb.freeze();
}

Residual check_coassociative(const Coalgebra& c) {
  int n = c.dim;
  return collect(LawId::Coassociative, n, [&](int i, Entries& out) {
    Ten3 r(n, n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Rat& dab = c.d.at(i, a, b);
        if (dab.is_zero()) continue;
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            if (!c.d.at(a, p, q).is_zero()) r.at(p, q, b) += dab * c.d.at(a, p, q);
            if (!c.d.at(b, p, q).is_zero()) r.at(a, p, q) -= dab * c.d.at(b, p, q);
          }
      }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
          emit(out, LawId::Coassociative, {i + 1, u + 1, v + 1, w + 1}, r.at(u, v, w));
  });
}

Residual check_cocommutative(const Coalgebra& c) {
  int n = c.dim;
  ResidualBuilder rb(LawId::Cocommutative);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        rb.add({i + 1, j + 1, k + 1}, c.d.at(i, j, k) - c.d.at(i, k, j));
  return rb.freeze();
}

Residual check_nijenhuis_algebra(const Algebra& a, const LinearMap& n) {
  require_square_map(n, a.dim, "Nijenhuis map");
  int nn = a.dim;
  Mat n2 = n.m * n.m;
  return collect(LawId::NijenhuisAlgebra, nn, [&](int i, Entries& out) {
    Vec ni = map_col(n, i);
    for (int j = 0; j < nn; ++j) {
      Vec nj = map_col(n, j);
      Vec r = bracket_eval(a, ni, nj);
      Vec xy(nn);
      for (int l = 0; l < nn; ++l) xy[l] = a.c.at(i, j, l);
      Vec t = mat_apply(n2, xy);
      for (int l = 0; l < nn; ++l) r[l] += t[l];
      t = mat_apply(n.m, bracket_eval(a, ni, basis_vec(nn, j)));
      for (int l = 0; l < nn; ++l) r[l] -= t[l];
      t = mat_apply(n.m, bracket_eval(a, basis_vec(nn, i), nj));
      for (int l = 0; l < nn; ++l) r[l] -= t[l];
      for (int l = 0; l < nn; ++l)
        emit(out, LawId::NijenhuisAlgebra, {i + 1, j + 1, l + 1}, r[l]);
    }
  });
}

Residual check_left_alia_coalgebra(const Coalgebra& c) {
  int n = c.dim;
  return collect(LawId::LeftAliaCoalgebra, n, [&](int i, Entries& out) {
    Ten3 r(n, n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Rat& dab = c.d.at(i, a, b);
        if (dab.is_zero()) continue;
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Rat& dpq = c.d.at(a, p, q);
            if (dpq.is_zero()) continue;
            Rat m = dab * dpq;
            // x_(1)(1) = e_p, x_(1)(2) = e_q, x_(2) = e_b
            r.at(q, p, b) += m;  // x12 x11 x2
            r.at(p, b, q) += m;  // x11 x2  x12
            r.at(b, q, p) += m;  // x2  x12 x11
            r.at(p, q, b) -= m;  // x11 x12 x2
            r.at(q, b, p) -= m;  // x12 x2  x11
            r.at(b, p, q) -= m;  // x2  x11 x12
          }
      }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
          emit(out, LawId::LeftAliaCoalgebra, {i + 1, u + 1, v + 1, w + 1}, r.at(u, v, w));
  });
}

Residual check_nijenhuis_coalgebra(const Coalgebra& c, const LinearMap& s) {
  require_square_map(s, c.dim, "Nijenhuis map");
  int n = c.dim;
  Mat s2 = s.m * s.m;
  Mat st = transpose(s.m);
  return collect(LawId::NijenhuisCoalgebra, n, [&](int i, Entries& out) {
    Mat di = comul_basis(c, i);
    Mat dsi = comul_of_image(c, s, i);
    Mat ds2i = comul_of_image(c, LinearMap{s2}, i);
    Mat r = s.m * di * st;  // S(x1) (x) S(x2)
    r += ds2i;              // delta(S^2 x)
    r -= s.m * dsi;         // S(Sx_1) (x) Sx_2
    r -= dsi * st;          // Sx_1 (x) S(Sx_2)
    emit_mat1(out, LawId::NijenhuisCoalgebra, i, r);
  });
}

Residual check_representation(const Algebra& a, const Representation& rep) {
  require_rep(a, rep);
  int n = a.dim;
  return collect(LawId::Representation, n, [&](int i, Entries& out) {
    for (int j = 0; j < n; ++j) {
      Mat m(rep.repDim, rep.repDim);
      for (int k = 0; k < n; ++k) {
        Rat cf = a.c.at(i, j, k) - a.c.at(j, i, k);
        if (!cf.is_zero()) m += cf * rep.ell[k];
      }
      m -= rep.arr[i] * (rep.arr[j] - rep.ell[j]);
      m += rep.arr[j] * (rep.arr[i] - rep.ell[i]);
      emit_mat(out, LawId::Representation, i, j, m);
    }
  });
}

Residual check_nijenhuis_representation(const Algebra& a, const LinearMap& n,
                                        const Representation& rep, const LinearMap& alpha) {
  require_rep(a, rep);
  require_square_map(n, a.dim, "N");
  require_square_map(alpha, rep.repDim, "alpha");
  if (!check_representation(a, rep).passed())
    throw AliaError(Err::RepInvalid, "(V, ell, r) is not a representation");
  int nn = a.dim;
  Mat a2 = alpha.m * alpha.m;
  return collect(LawId::NijenhuisRepresentation, nn, [&](int i, Entries& out) {
    Mat elln(rep.repDim, rep.repDim), arrn(rep.repDim, rep.repDim);
    for (int k = 0; k < nn; ++k) {
      if (n.m.at(k, i).is_zero()) continue;
      elln += n.m.at(k, i) * rep.ell[k];
      arrn += n.m.at(k, i) * rep.arr[k];
    }
    Mat r1 = elln * alpha.m + a2 * rep.ell[i] - alpha.m * elln - alpha.m * rep.ell[i] * alpha.m;
    Mat r2 = arrn * alpha.m + a2 * rep.arr[i] - alpha.m * arrn - alpha.m * rep.arr[i] * alpha.m;
    emit_mat1(out, LawId::NijenhuisRepEll, i, r1);
    emit_mat1(out, LawId::NijenhuisRepArr, i, r2);
  });
}

Residual check_admissible(const Algebra& a, const LinearMap& n, const Representation& rep,
                          const LinearMap& beta) {
  require_rep(a, rep);
  require_square_map(n, a.dim, "N");
  require_square_map(beta, rep.repDim, "beta");
  int nn = a.dim;
  Mat b2 = beta.m * beta.m;
  return collect(LawId::Admissible, nn, [&](int i, Entries& out) {
    Mat elln(rep.repDim, rep.repDim), arrn(rep.repDim, rep.repDim);
    for (int k = 0; k < nn; ++k) {
      if (n.m.at(k, i).is_zero()) continue;
      elln += n.m.at(k, i) * rep.ell[k];
      arrn += n.m.at(k, i) * rep.arr[k];
    }
    Mat r1 = beta.m * elln + rep.ell[i] * b2 - elln * beta.m - beta.m * rep.ell[i] * beta.m;
    Mat r2 = beta.m * arrn + rep.arr[i] * b2 - arrn * beta.m - beta.m * rep.arr[i] * beta.m;
    emit_mat1(out, LawId::AdmissibleEll, i, r1);
    emit_mat1(out, LawId::AdmissibleArr, i, r2);
  });
}

Residual check_adjoint_admissible(const Algebra& a, const LinearMap& n, const LinearMap& s) {
  require_square_map(n, a.dim, "N");
  require_square_map(s, a.dim, "S");
  int nn = a.dim;
  Mat s2m = s.m * s.m;
  return collect(LawId::AdjointAdmissible, nn, [&](int i, Entries& out) {
    Vec ei = basis_vec(nn, i);
    Vec ni = map_col(n, i);
    Vec si = map_col(s, i);
    Vec s2i = mat_apply(s2m, ei);
    for (int j = 0; j < nn; ++j) {
      Vec ej = basis_vec(nn, j);
      Vec nj = map_col(n, j);
      Vec sj = map_col(s, j);
      Vec s2j = mat_apply(s2m, ej);
      // S[N(x), y] + [x, S^2(y)] - S[x, S(y)] - [N(x), S(y)]
      Vec r = mat_apply(s.m, bracket_eval(a, ni, ej));
      Vec t = bracket_eval(a, ei, s2j);
      for (int l = 0; l < nn; ++l) r[l] += t[l];
      t = mat_apply(s.m, bracket_eval(a, ei, sj));
      for (int l = 0; l < nn; ++l) r[l] -= t[l];
      t = bracket_eval(a, ni, sj);
      for (int l = 0; l < nn; ++l) r[l] -= t[l];
      for (int l = 0; l < nn; ++l)
        emit(out, LawId::AdjointAdmissible1, {i + 1, j + 1, l + 1}, r[l]);
      // S[x, N(y)] + [S^2(x), y] - S[S(x), y] - [S(x), N(y)]
      r = mat_apply(s.m, bracket_eval(a, ei, nj));
      t = bracket_eval(a, s2i, ej);
      for (int l = 0; l < nn; ++l) r[l] += t[l];
      t = mat_apply(s.m, bracket_eval(a, si, ej));
      for (int l = 0; l < nn; ++l) r[l] -= t[l];
      t = bracket_eval(a, si, nj);
      for (int l = 0; l < nn; ++l) r[l] -= t[l];
      for (int l = 0; l < nn; ++l)
        emit(out, LawId::AdjointAdmissible2, {i + 1, j + 1, l + 1}, r[l]);
    }
  });
}

Residual check_coadjoint_admissible(const Coalgebra& c, const LinearMap& s, const LinearMap& n) {
  require_square_map(s, c.dim, "S");
  require_square_map(n, c.dim, "N");
  int nn = c.dim;
  Mat n2 = n.m * n.m;
  Mat nt = transpose(n.m);
  Mat n2t = transpose(n2);
  Mat st = transpose(s.m);
  return collect(LawId::CoadjointAdmissible, nn, [&](int i, Entries& out) {
    Mat di = comul_basis(c, i);
    Mat dni = comul_of_image(c, n, i);
    // S(Nx_1) (x) Nx_2 + x_1 (x) N^2(x_2) - S(x_1) (x) N(x_2) - Nx_1 (x) N(Nx_2)
    Mat r1 = s.m * dni + di * n2t - s.m * di * nt - dni * nt;
    emit_mat1(out, LawId::CoadjointAdmissible1, i, r1);
    // Nx_1 (x) S(Nx_2) + N^2(x_1) (x) x_2 - N(x_1) (x) S(x_2) - N(Nx_1) (x) Nx_2
    Mat r2 = dni * st + n2 * di - n.m * di * st - n.m * dni;
    emit_mat1(out, LawId::CoadjointAdmissible2, i, r2);
  });
}

Residual check_bialgebra_compat(const Algebra& a, const Coalgebra& c) {
  if (a.dim != c.dim) throw AliaError(Err::DimensionMismatch, "bracket vs comul dimension");
  int n = a.dim;
  return collect(LawId::BialgebraCompat, n, [&](int i, Entries& out) {
    Mat di = comul_basis(c, i);
    Mat ri = right_mult(a, i);
    for (int j = 0; j < n; ++j) {
      Mat m1(n, n);  // delta([x,y] - [y,x])
      for (int k = 0; k < n; ++k) {
        Rat cf = a.c.at(i, j, k) - a.c.at(j, i, k);
        if (!cf.is_zero()) m1 += cf * comul_basis(c, k);
      }
      Mat m2 = right_mult(a, j) * di - ri * comul_basis(c, j);
      Mat diff = m1 - m2;
      Mat r = transpose(diff) - diff;  // (tau - id)(m1 - m2)
      emit_mat(out, LawId::BialgebraCompat, i, j, r);
    }
  });
}

Residual check_nijenhuis_left_alia_bialgebra(const Algebra& a, const Coalgebra& c,
                                             const LinearMap& n, const LinearMap& s) {
  if (a.dim != c.dim) throw AliaError(Err::DimensionMismatch, "bracket vs comul dimension");
  require_square_map(n, a.dim, "N");
  require_square_map(s, a.dim, "S");
  ResidualBuilder rb(LawId::NijLeftAliaBialgebra);
  rb.merge(check_left_alia(a));
  rb.merge(check_left_alia_coalgebra(c));
  rb.merge(check_bialgebra_compat(a, c));
  rb.merge(check_nijenhuis_algebra(a, n));
  rb.merge(check_nijenhuis_coalgebra(c, s));
  rb.merge(check_adjoint_admissible(a, n, s));
  rb.merge(check_coadjoint_admissible(c, s, n));
  return rb.freeze();
}

Residual check_quadratic(const Algebra& a, const BilinearForm& b) {
  if (b.dim() != a.dim) throw AliaError(Err::DimensionMismatch, "form vs algebra dimension");
  int n = a.dim;
  ResidualBuilder rb(LawId::Quadratic);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rb.add(LawId::QuadSymmetric, {i + 1, j + 1}, b.w.at(i, j) - b.w.at(j, i));
  int rank = exact_rank(b.w);
  if (rank < n) rb.add(LawId::QuadNondegenerate, {}, Rat(n - rank));
  Residual head = rb.freeze();
  Residual inv = collect(LawId::Quadratic, n, [&](int i, Entries& out) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // B([x,y], z) - B(x, [z,y] - [y,z])
        Rat v;
        for (int l = 0; l < n; ++l) {
          if (!a.c.at(i, j, l).is_zero()) v += a.c.at(i, j, l) * b.w.at(l, k);
          Rat cf = a.c.at(k, j, l) - a.c.at(j, k, l);
          if (!cf.is_zero()) v -= cf * b.w.at(i, l);
        }
        emit(out, LawId::QuadInvariant, {i + 1, j + 1, k + 1}, v);
      }
  });
  ResidualBuilder all(LawId::Quadratic);
  all.merge(head);
  all.merge(inv);
  return all.freeze();
}

Residual check_symplectic(const Algebra& a, const BilinearForm& w) {
  if (w.dim() != a.dim) throw AliaError(Err::DimensionMismatch, "form vs algebra dimension");
  int n = a.dim;
  ResidualBuilder rb(LawId::Symplectic);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rb.add(LawId::SymplecticSkew, {i + 1, j + 1}, w.w.at(i, j) + w.w.at(j, i));
  Residual head = rb.freeze();
  Residual body = collect(LawId::Symplectic, n, [&](int i, Entries& out) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // w([y,z] - [z,y], x) - w([x,y], z) + w([x,z], y)
        Rat v;
        for (int l = 0; l < n; ++l) {
          Rat cf = a.c.at(j, k, l) - a.c.at(k, j, l);
          if (!cf.is_zero()) v += cf * w.w.at(l, i);
          if (!a.c.at(i, j, l).is_zero()) v -= a.c.at(i, j, l) * w.w.at(l, k);
          if (!a.c.at(i, k, l).is_zero()) v += a.c.at(i, k, l) * w.w.at(l, j);
        }
        emit(out, LawId::SymplecticIdentity, {i + 1, j + 1, k + 1}, v);
      }
  });
  ResidualBuilder all(LawId::Symplectic);
  all.merge(head);
  all.merge(body);
  return all.freeze();
}

Residual check_cosymplectic(const Coalgebra& c, const TwoTensor& r) {
  if (r.dim() != c.dim) throw AliaError(Err::DimensionMismatch, "tensor vs comul dimension");
  int n = c.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(r.t.at(i, j) + r.t.at(j, i)).is_zero())
        throw AliaError(Err::NotAntisymmetric, "r + tau(r) != 0");
  Ten3 acc(n, n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const Rat& tuv = r.t.at(u, v);
      if (tuv.is_zero()) continue;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const Rat& dpq = c.d.at(u, p, q);
          if (dpq.is_zero()) continue;
          Rat m = tuv * dpq;
          acc.at(p, q, v) += m;  //  a1 (x) a2 (x) b
          acc.at(q, p, v) -= m;  // -a2 (x) a1 (x) b
          acc.at(q, v, p) -= m;  // -a2 (x) b  (x) a1
          acc.at(v, q, p) += m;  //  b  (x) a2 (x) a1
        }
    }
  ResidualBuilder rb(LawId::Cosymplectic);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) rb.add({i + 1, j + 1, k + 1}, acc.at(i, j, k));
  return rb.freeze();
}

Residual check_d_bialgebra(const Algebra& a, const Coalgebra& c) {
  if (a.dim != c.dim) throw AliaError(Err::DimensionMismatch, "product vs comul dimension");
  int n = a.dim;
  ResidualBuilder rb(LawId::DBialgebra);
  rb.merge(check_commutative(a));
  rb.merge(check_cocommutative(c));
  rb.merge(check_associative(a));
  rb.merge(check_coassociative(c));
  Residual compat = collect(LawId::DBialgebra, n, [&](int i, Entries& out) {
    Mat di = comul_basis(c, i);
    Mat li = left_mult(a, i);
    for (int j = 0; j < n; ++j) {
      // delta(ab) - a1*b (x) a2 - b1 (x) a*b2
      Mat m(n, n);
      for (int k = 0; k < n; ++k)
        if (!a.c.at(i, j, k).is_zero()) m += a.c.at(i, j, k) * comul_basis(c, k);
      m -= right_mult(a, j) * di;
      m -= comul_basis(c, j) * transpose(li);
      emit_mat(out, LawId::DBialgebraCompat, i, j, m);
    }
  });
  rb.merge(compat);
  return rb.freeze();
}

Residual check_nijenhuis_d_compat(const Algebra& a, const Coalgebra& c, const LinearMap& f,
                                  const LinearMap& bigF) {
  if (a.dim != c.dim) throw AliaError(Err::DimensionMismatch, "product vs comul dimension");
  require_square_map(f, a.dim, "f");
  require_square_map(bigF, a.dim, "F");
  int n = a.dim;
  Mat f2 = f.m * f.m;
  Mat bigF2 = bigF.m * bigF.m;
  return collect(LawId::NijenhuisDCompat, n, [&](int i, Entries& out) {
    Vec ei = basis_vec(n, i);
    Vec fi = map_col(f, i);
    for (int j = 0; j < n; ++j) {
      Vec ej = basis_vec(n, j);
      // F(f(x)y) + x F^2(y) - f(x) F(y) - F(x F(y))
      Vec fyj = map_col(bigF, j);
      Vec r = mat_apply(bigF.m, bracket_eval(a, fi, ej));
      Vec t = bracket_eval(a, ei, mat_apply(bigF2, ej));
      for (int l = 0; l < n; ++l) r[l] += t[l];
      t = bracket_eval(a, fi, fyj);
      for (int l = 0; l < n; ++l) r[l] -= t[l];
      t = mat_apply(bigF.m, bracket_eval(a, ei, fyj));
      for (int l = 0; l < n; ++l) r[l] -= t[l];
      for (int l = 0; l < n; ++l)
        emit(out, LawId::NijDCompatAlg, {i + 1, j + 1, l + 1}, r[l]);
    }
    // F(fx_1) (x) fx_2 + x_1 (x) f^2(x_2) - F(x_1) (x) f(x_2) - fx_1 (x) f(fx_2)
    Mat di = comul_basis(c, i);
    Mat dfi = comul_of_image(c, f, i);
    Mat ft = transpose(f.m);
    Mat m = bigF.m * dfi + di * transpose(f2) - bigF.m * di * ft - dfi * ft;
    emit_mat1(out, LawId::NijDCompatCoalg, i, m);
  });
}

Residual check_special_bialgebra_condition(const Algebra& a, const Coalgebra& c,
                                           const LinearMap& f, const LinearMap& g,
                                           const LinearMap& bigF, const LinearMap& bigG) {
  if (a.dim != c.dim) throw AliaError(Err::DimensionMismatch, "product vs comul dimension");
  for (const LinearMap* m : {&f, &g, &bigF, &bigG}) require_square_map(*m, a.dim, "map");
  if (!check_d_bialgebra(a, c).passed())
    throw AliaError(Err::DBialgebraInvalid, "(A, *, delta) is not a D-bialgebra");
  int n = a.dim;
  // One (x, y) half of the display; the full residual is E(x,y) - E(y,x).
  auto half = [&](int i, int j) {
    // f(y)_1 (x) F(x * f(y)_2), antisymmetrized by the pairing below:
    Mat t1 = comul_of_image(c, f, j) * transpose(bigF.m * left_mult(a, i));
    // g(x_1 * y) (x) F(x_2)
    Mat m3 = (g.m * right_mult(a, j)) * comul_basis(c, i) * transpose(bigF.m);
    // G(x)_1 * f(y) (x) G(x)_2
    Mat rf(n, n);
    for (int b = 0; b < n; ++b)
      if (!f.m.at(b, j).is_zero()) rf += f.m.at(b, j) * right_mult(a, b);
    Mat dgi = comul_of_image(c, bigG, i);
    Mat m5 = rf * dgi;
    // g(G(x)_1 * y) (x) G(x)_2
    Mat m7 = (g.m * right_mult(a, j)) * dgi;
    Mat sum = t1 - m3 - m5 - m7;
    return sum - transpose(sum);  // (id - tau) applied to every pair above
  };
  return collect(LawId::SpecialBialgebraCondition, n, [&](int i, Entries& out) {
    for (int j = 0; j < n; ++j) {
      Mat r = half(i, j) - half(j, i);
      emit_mat(out, LawId::SpecialBialgebraCondition, i, j, r);
    }
  });
}

}  // namespace alia
