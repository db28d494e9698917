#pragma once

// Deterministic random structure generators shared across the test suites.
// Commutative associative algebras are built exactly (truncated polynomial
// blocks and direct sums), never by rejection sampling, so every hypothesis
// a theorem needs is guaranteed by construction.

#include <random>
#include <vector>

#include "alia/constructions.hpp"
#include "alia/types.hpp"

namespace alia::testgen {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(eng_);
  }

  Rat rat(int span = 3) {
    std::uniform_int_distribution<int> num(-span, span), den(1, 2);
    return Rat(num(eng_), den(eng_));
  }

  /// Sparse random rational; zero with probability around 1/2.
  Rat sparse_rat(int span = 3) { return uniform(0, 1) ? rat(span) : Rat(0); }

  Vec vec(int n, int span = 3) {
    Vec v(n);
    for (auto& x : v) x = rat(span);
    return v;
  }

  Mat mat(int rows, int cols, int span = 2) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = sparse_rat(span);
    return m;
  }

  LinearMap map(int n, int span = 2) { return LinearMap(mat(n, n, span)); }

  Algebra algebra(int n, int span = 2) {
    Algebra a(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) a.c.at(i, j, k) = uniform(0, 2) ? Rat(0) : rat(span);
    return a;
  }

  Coalgebra coalgebra(int n, int span = 2) {
    Coalgebra c(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) c.d.at(i, j, k) = uniform(0, 2) ? Rat(0) : rat(span);
    return c;
  }

  TwoTensor tensor(int n, int span = 2) {
    TwoTensor t(n);
    t.t = mat(n, n, span);
    return t;
  }

  TwoTensor antisymmetric_tensor(int n, int span = 2) {
    TwoTensor t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Rat v = sparse_rat(span);
        t.t.at(i, j) = v;
        t.t.at(j, i) = -v;
      }
    return t;
  }

  BilinearForm skew_form(int n, int span = 2) {
    BilinearForm w(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Rat v = sparse_rat(span);
        w.w.at(i, j) = v;
        w.w.at(j, i) = -v;
      }
    return w;
  }

  std::mt19937_64& raw() { return eng_; }

private:
  std::mt19937_64 eng_;
};

/// Product on K[t]/(t^k): basis t^0 .. t^(k-1).
inline Algebra truncated_polynomial_algebra(int k) {
  Algebra a(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i + j < k) a.c.at(i, j, i + j) = Rat(1);
  return a;
}

/// Orthogonal direct sum of commutative associative blocks.
inline Algebra block_sum(const std::vector<Algebra>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.dim;
  Algebra a(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j)
        for (int k = 0; k < b.dim; ++k) a.c.at(off + i, off + j, off + k) = b.c.at(i, j, k);
    off += b.dim;
  }
  return a;
}

/// Multiplication by a fixed element plus a scalar: always a Nijenhuis
/// operator on a commutative associative algebra, and any two such commute.
inline LinearMap mult_plus_scalar(const Algebra& a, const Vec& elem, const Rat& scalar) {
  LinearMap f(a.dim);
  for (int j = 0; j < a.dim; ++j) {
    for (int i = 0; i < a.dim; ++i) {
      Rat v = (i == j) ? scalar : Rat(0);
      for (int u = 0; u < a.dim; ++u)
        if (!elem[u].is_zero() && !a.c.at(u, j, i).is_zero()) v += elem[u] * a.c.at(u, j, i);
      f.m.at(i, j) = v;
    }
  }
  return f;
}

struct CommAssocInstance {
  Algebra product;       // commutative associative
  std::vector<int> block_sizes;
  LinearMap f, g;        // commuting multiplication-type operators
};

/// Random direct sum of truncated polynomial blocks of total dim <= max_dim,
/// with two commuting Nijenhuis operators.
inline CommAssocInstance random_comm_assoc(Rng& rng, int max_dim) {
  CommAssocInstance inst;
  int remaining = rng.uniform(1, max_dim);
  std::vector<Algebra> blocks;
  while (remaining > 0) {
    int k = rng.uniform(1, remaining);
    blocks.push_back(truncated_polynomial_algebra(k));
    inst.block_sizes.push_back(k);
    remaining -= k;
  }
  inst.product = block_sum(blocks);
  inst.f = mult_plus_scalar(inst.product, rng.vec(inst.product.dim), rng.rat());
  inst.g = mult_plus_scalar(inst.product, rng.vec(inst.product.dim), rng.rat());
  return inst;
}

/// Socle comultiplication on a block sum: delta(t) = v * t^(k-1) (x) t^(k-1)
/// per block of size k >= 2. Together with the block product this satisfies
/// the D-bialgebra compatibility exactly.
inline Coalgebra socle_comultiplication(const std::vector<int>& block_sizes,
                                        const std::vector<Rat>& weights) {
  int n = 0;
  for (int k : block_sizes) n += k;
  Coalgebra c(n);
  int off = 0;
  for (size_t b = 0; b < block_sizes.size(); ++b) {
    int k = block_sizes[b];
    if (k >= 2) c.d.at(off + 1, off + k - 1, off + k - 1) = weights[b];
    off += k;
  }
  return c;
}

/// A left Alia algebra with a symmetric bracket: [x,y] = xy + g(xy) over a
/// commutative associative product. Any (V, L, L) is then a representation.
inline Algebra symmetric_special_left_alia(Rng& rng, int max_dim, LinearMap* g_out = nullptr) {
  CommAssocInstance inst = random_comm_assoc(rng, max_dim);
  LinearMap id = LinearMap::identity(inst.product.dim);
  if (g_out) *g_out = inst.g;
  return special_left_alia(inst.product, id, inst.g);
}

struct BialgebraInstance {
  Algebra alg;
  Coalgebra coalg;
  LinearMap n, s;
};

/// A full bialgebra that satisfies all five defining conditions, built from
/// a commutative cocommutative D-bialgebra with commuting multiplication
/// operators f, g whose leading eigenvalues agree blockwise (that alignment
/// is what makes the coalgebra-side compatibility exact).
inline BialgebraInstance random_bialgebra(Rng& rng, int max_dim) {
  int remaining = rng.uniform(1, max_dim);
  std::vector<Algebra> blocks;
  std::vector<int> sizes;
  while (remaining > 0) {
    int k = rng.uniform(1, remaining);
    blocks.push_back(truncated_polynomial_algebra(k));
    sizes.push_back(k);
    remaining -= k;
  }
  Algebra product = block_sum(blocks);
  Vec a = rng.vec(product.dim);
  Vec b = rng.vec(product.dim);
  Rat cf = rng.rat(), cg = rng.rat();
  int off = 0;
  for (int k : sizes) {
    b[off] = a[off] + cf - cg;  // match f and g on each block's socle
    off += k;
  }
  LinearMap f = mult_plus_scalar(product, a, cf);
  LinearMap g = mult_plus_scalar(product, b, cg);
  std::vector<Rat> weights;
  for (size_t u = 0; u < sizes.size(); ++u) weights.push_back(rng.rat());
  Coalgebra delta = socle_comultiplication(sizes, weights);

  BialgebraInstance inst;
  inst.alg = special_left_alia(product, f, g);
  inst.coalg = special_left_alia_coalgebra(delta, g, f);
  inst.n = f;
  inst.s = g;
  return inst;
}

/// Matched-pair data of the double: A and the dual of C acting on each other
/// through the signed dual adjoint actions.
inline MatchedPairData double_pair_data(const Algebra& a, const Coalgebra& c,
                                        const std::optional<LinearMap>& n = std::nullopt,
                                        const std::optional<LinearMap>& s = std::nullopt) {
  MatchedPairData mp;
  mp.algA = a;
  mp.algB = dualize_coalgebra(c);
  mp.repAB = dual_representation(left_right_operators(a));
  mp.repBA = dual_representation(left_right_operators(mp.algB));
  mp.nijA = n;
  if (s) mp.nijB = dual_map(*s);
  return mp;
}

}  // namespace alia::testgen
