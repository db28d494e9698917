#include "alia/types.hpp"

#include "alia/residual.hpp"

namespace alia {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat& Mat::operator+=(const Mat& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  assert(a.cols() == b.rows());
  Mat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

Mat& Mat::scale(const Rat& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Mat operator*(const Rat& c, Mat m) {
  m.scale(c);
  return m;
}

Mat transpose(const Mat& m) {
  Mat r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
  return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  assert(int(v.size()) == m.cols());
  Vec r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

Mat kron(const Mat& p, const Mat& q) {
  Mat r(p.rows() * q.rows(), p.cols() * q.cols());
  for (int a = 0; a < p.rows(); ++a)
    for (int u = 0; u < p.cols(); ++u) {
      if (p.at(a, u).is_zero()) continue;
      for (int b = 0; b < q.rows(); ++b)
        for (int v = 0; v < q.cols(); ++v)
          if (!q.at(b, v).is_zero())
            r.at(a * q.rows() + b, u * q.cols() + v) = p.at(a, u) * q.at(b, v);
    }
  return r;
}

Vec vectorize(const Mat& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Mat unvectorize(const Vec& v, int rows, int cols) {
  assert(int(v.size()) == rows * cols);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = v[size_t(i) * cols + j];
  return m;
}

int exact_rank(Mat m) {
  int rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    Rat inv = Rat(1) / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rat d = Rat(1) / a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

TwoTensor flip(const TwoTensor& t) {
  TwoTensor r;
  r.t = transpose(t.t);
  return r;
}

Vec bracket_eval(const Algebra& a, const Vec& x, const Vec& y) {
  if (int(x.size()) != a.dim || int(y.size()) != a.dim)
    throw AliaError(Err::DimensionMismatch, "bracket_eval: vector length != algebra dim");
  Vec r(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < a.dim; ++j) {
      if (y[j].is_zero()) continue;
      Rat cij = x[i] * y[j];
      for (int k = 0; k < a.dim; ++k)
        if (!a.c.at(i, j, k).is_zero()) r[k] += cij * a.c.at(i, j, k);
    }
  }
  return r;
}

Mat left_mult(const Algebra& a, int i) {
  Mat m(a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j)
    for (int k = 0; k < a.dim; ++k) m.at(k, j) = a.c.at(i, j, k);
  return m;
}

Mat right_mult(const Algebra& a, int i) {
  Mat m(a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j)
    for (int k = 0; k < a.dim; ++k) m.at(k, j) = a.c.at(j, i, k);
  return m;
}

Representation left_right_operators(const Algebra& a) {
  Representation rep(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    rep.ell[i] = left_mult(a, i);
    rep.arr[i] = right_mult(a, i);
  }
  return rep;
}

Vec map_apply(const LinearMap& f, const Vec& v) { return mat_apply(f.m, v); }

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  LinearMap r;
  r.m = f.m * g.m;
  return r;
}

Mat comul_eval(const Coalgebra& c, const Vec& x) {
  assert(int(x.size()) == c.dim);
  Mat m(c.dim, c.dim);
  for (int i = 0; i < c.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < c.dim; ++j)
      for (int k = 0; k < c.dim; ++k)
        if (!c.d.at(i, j, k).is_zero()) m.at(j, k) += x[i] * c.d.at(i, j, k);
  }
  return m;
}

LinearMap dual_map(const LinearMap& f) {
  LinearMap r;
  r.m = transpose(f.m);
  return r;
}

Algebra dualize_coalgebra(const Coalgebra& c) {
  Algebra a(c.dim);
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.dim; ++j)
      for (int k = 0; k < c.dim; ++k) a.c.at(j, k, i) = c.d.at(i, j, k);
  return a;
}

Coalgebra dualize_algebra(const Algebra& a) {
  Coalgebra c(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) c.d.at(i, j, k) = a.c.at(j, k, i);
  return c;
}

Vec basis_vec(int n, int i) {
  Vec v(n);
  v[i] = Rat(1);
  return v;
}

}  // namespace alia
