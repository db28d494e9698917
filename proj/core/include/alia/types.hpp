#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alia/rational.hpp"

// Basis-indexed dense containers for finite-dimensional structures.
//
// Conventions (fixed once, used everywhere):
//   Algebra      c(i,j,k):  [e_i, e_j]   = sum_k c(i,j,k) e_k
//   Coalgebra    d(i,j,k):  delta(e_i)   = sum_{j,k} d(i,j,k) e_j (x) e_k
//   LinearMap    m(i,j):    f(e_j)       = sum_i m(i,j) e_i      (column convention)
//   TwoTensor    t(i,j):    r            = sum_{i,j} t(i,j) e_i (x) e_j
//   BilinearForm w(i,j):    w(e_i, e_j)
//   Representation: ell[i], arr[i] are the endomorphisms of V attached to e_i,
//                   acting on column vectors of V-coordinates.
//
// All indices are 0-based internally; reports and file formats are 1-based.

namespace alia {

using Vec = std::vector<Rat>;

class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { a += b; return a; }
  friend Mat operator-(Mat a, const Mat& b) { a -= b; return a; }
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat& scale(const Rat& c);

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

Mat transpose(const Mat& m);
Mat operator*(const Rat& c, Mat m);
Vec mat_apply(const Mat& m, const Vec& v);
/// Kronecker product; with row-major vectorization, vec(P t Q^T) = kron(P, Q) vec(t).
Mat kron(const Mat& p, const Mat& q);
Vec vectorize(const Mat& m);
Mat unvectorize(const Vec& v, int rows, int cols);
/// Exact rank via fraction-exact Gaussian elimination.
int exact_rank(Mat m);
std::optional<Mat> inverse(const Mat& m);

class Ten3 {
public:
  Ten3() : n0_(0), n1_(0), n2_(0) {}
  Ten3(int n0, int n1, int n2) : n0_(n0), n1_(n1), n2_(n2), a_(size_t(n0) * n1 * n2) {}

  int dim0() const { return n0_; }
  int dim1() const { return n1_; }
  int dim2() const { return n2_; }

  Rat& at(int i, int j, int k) { return a_[(size_t(i) * n1_ + j) * n2_ + k]; }
  const Rat& at(int i, int j, int k) const { return a_[(size_t(i) * n1_ + j) * n2_ + k]; }

  bool operator==(const Ten3& o) const {
    return n0_ == o.n0_ && n1_ == o.n1_ && n2_ == o.n2_ && a_ == o.a_;
  }

private:
  int n0_, n1_, n2_;
  std::vector<Rat> a_;
};

struct Algebra {
  int dim = 0;
  Ten3 c;  // shape dim x dim x dim

  Algebra() = default;
  explicit Algebra(int n) : dim(n), c(n, n, n) {}
  bool operator==(const Algebra& o) const { return dim == o.dim && c == o.c; }
};

struct Coalgebra {
  int dim = 0;
  Ten3 d;

  Coalgebra() = default;
  explicit Coalgebra(int n) : dim(n), d(n, n, n) {}
  bool operator==(const Coalgebra& o) const { return dim == o.dim && d == o.d; }
};

struct LinearMap {
  Mat m;

  LinearMap() = default;
  explicit LinearMap(int n) : m(n, n) {}
  LinearMap(int rows, int cols) : m(rows, cols) {}
  explicit LinearMap(Mat mat) : m(std::move(mat)) {}
  static LinearMap identity(int n) { LinearMap f; f.m = Mat::identity(n); return f; }
  static LinearMap zero(int n) { return LinearMap(n); }

  int rows() const { return m.rows(); }
  int cols() const { return m.cols(); }
  bool operator==(const LinearMap& o) const { return m == o.m; }
};

struct TwoTensor {
  Mat t;

  TwoTensor() = default;
  explicit TwoTensor(int n) : t(n, n) {}
  int dim() const { return t.rows(); }
  bool operator==(const TwoTensor& o) const { return t == o.t; }
};

struct BilinearForm {
  Mat w;

  BilinearForm() = default;
  explicit BilinearForm(int n) : w(n, n) {}
  int dim() const { return w.rows(); }
  bool operator==(const BilinearForm& o) const { return w == o.w; }
};

struct Representation {
  int algDim = 0;
  int repDim = 0;
  std::vector<Mat> ell;  // ell[i] = matrix of ell(e_i) on V
  std::vector<Mat> arr;  // arr[i] = matrix of r(e_i) on V

  Representation() = default;
  Representation(int n, int m)
      : algDim(n), repDim(m), ell(n, Mat(m, m)), arr(n, Mat(m, m)) {}
};

/// A named collection of structures on one underlying space, as read from a
/// structure file or produced by the fixture catalog.
struct StructureBundle {
  int dim = 0;
  std::optional<Algebra> bracket;    // bilinear product (bracket or associative)
  std::optional<Coalgebra> comul;
  std::map<std::string, LinearMap> maps;
  std::map<std::string, TwoTensor> tensors;
  std::map<std::string, BilinearForm> forms;
};

// Elementary multilinear operations.

/// tau(r): transpose of the coefficient matrix.
TwoTensor flip(const TwoTensor& t);

/// [x, y] for coordinate vectors x, y of length A.dim.
Vec bracket_eval(const Algebra& a, const Vec& x, const Vec& y);

/// Matrix of left multiplication by e_i: y -> [e_i, y].
Mat left_mult(const Algebra& a, int i);
/// Matrix of right multiplication by e_i: y -> [y, e_i].
Mat right_mult(const Algebra& a, int i);

/// Adjoint representation (A, L, R) with L(x)y = [x, y] = R(y)x.
Representation left_right_operators(const Algebra& a);

/// Image of a coordinate vector under a linear map.
Vec map_apply(const LinearMap& f, const Vec& v);
LinearMap compose(const LinearMap& f, const LinearMap& g);  // f after g

/// delta(x) as a coefficient matrix M with M(j,k) the coefficient of e_j (x) e_k.
Mat comul_eval(const Coalgebra& c, const Vec& x);

/// Plain dual of a single map: transpose (no sign).
LinearMap dual_map(const LinearMap& f);

/// Algebra on the dual basis with c*(j,k,i) = d(i,j,k).
Algebra dualize_coalgebra(const Coalgebra& c);
/// Inverse direction: d(i,j,k) = c(j,k,i).
Coalgebra dualize_algebra(const Algebra& a);

Vec basis_vec(int n, int i);

}  // namespace alia
