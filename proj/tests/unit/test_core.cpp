#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alia/fixtures.hpp"
#include "alia/laws.hpp"
#include "alia/report.hpp"
#include "gen.hpp"

using namespace alia;
using testgen::Rng;

TEST_CASE("rational arithmetic is an exact field") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = rng.rat(50), b = rng.rat(50), c = rng.rat(50);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat::parse("7/21") == Rat(1, 3));
  CHECK(Rat::parse("-4") == Rat(-4));
  CHECK_THROWS(Rat::parse("1/0"));

  // witnesses far beyond machine words
  Rat big(1);
  for (long k = 2; k <= 50; ++k) big *= Rat(k, k - 1);  // telescopes to 50
  CHECK(big == Rat(50));
  Rat huge = Rat::parse("123456789012345678901234567890/7");
  CHECK((huge * Rat(7)).str() == "123456789012345678901234567890");
  Rat tiny = Rat(1) / huge;
  CHECK(tiny * huge == Rat(1));
  CHECK(Rat::parse(huge.str()) == huge);
}

TEST_CASE("flip transposes and is an involution") {
  TwoTensor t(3);
  t.t.at(0, 1) = Rat(1);
  CHECK(flip(t).t.at(1, 0) == Rat(1));
  CHECK(flip(t).t.at(0, 1) == Rat(0));

  auto r12 = fixture("FIX_r12").tensors.at("r");
  TwoTensor neg = r12;
  neg.t.scale(Rat(-1));
  CHECK(flip(r12) == neg);

  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    TwoTensor rt = rng.tensor(rng.uniform(1, 5));
    CHECK(flip(flip(rt)) == rt);
  }
}

TEST_CASE("bracket_eval on the 4-dimensional table") {
  auto a = *fixture("FIX_A4").bracket;
  CHECK(bracket_eval(a, basis_vec(4, 2), basis_vec(4, 0)) == basis_vec(4, 0));  // [e3,e1] = e1
  CHECK(bracket_eval(a, basis_vec(4, 0), basis_vec(4, 2)) == Vec(4));           // [e1,e3] = 0
  CHECK(bracket_eval(a, basis_vec(4, 3), basis_vec(4, 0)) == basis_vec(4, 2));  // [e4,e1] = e3
  CHECK_THROWS_AS(bracket_eval(a, Vec(3), Vec(4)), AliaError);
}

TEST_CASE("adjoint representation operators") {
  auto a = *fixture("FIX_A4").bracket;
  Representation rep = left_right_operators(a);
  // L(e3) maps e1 to e1 and kills everything else
  CHECK(rep.ell[2].at(0, 0) == Rat(1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!(i == 0 && j == 0)) CHECK(rep.ell[2].at(i, j) == Rat(0));

  Algebra zero(3);
  Representation zrep = left_right_operators(zero);
  for (int i = 0; i < 3; ++i) {
    CHECK(zrep.ell[i].is_zero());
    CHECK(zrep.arr[i].is_zero());
  }

  // L(x)y = [x,y] = R(y)x on random vectors
  auto sl2 = *fixture("FIX_SL2").bracket;
  Representation srep = left_right_operators(sl2);
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Vec x = rng.vec(3), y = rng.vec(3);
    Vec lx(3), ry(3);
    for (int k = 0; k < 3; ++k) {
      Vec t1 = mat_apply(srep.ell[k], y), t2 = mat_apply(srep.arr[k], x);
      for (int l = 0; l < 3; ++l) {
        lx[l] += x[k] * t1[l];
        ry[l] += y[k] * t2[l];
      }
    }
    CHECK(lx == bracket_eval(sl2, x, y));
    CHECK(lx == ry);
  }
}

TEST_CASE("dual_map is the transpose and reverses composition") {
  CHECK(dual_map(LinearMap::identity(4)) == LinearMap::identity(4));
  auto n4 = fixture("FIX_N4").maps.at("N");
  CHECK(dual_map(n4).m == transpose(n4.m));

  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.uniform(1, 5);
    LinearMap m = rng.map(n), p = rng.map(n);
    CHECK(dual_map(compose(m, p)) == compose(dual_map(p), dual_map(m)));
    // <M*(a*), v> = <a*, M(v)>
    Vec astar = rng.vec(n), v = rng.vec(n);
    Vec lhs = map_apply(dual_map(m), astar), rhs = map_apply(m, v);
    Rat left, right;
    for (int i = 0; i < n; ++i) {
      left += lhs[i] * v[i];
      right += astar[i] * rhs[i];
    }
    CHECK(left == right);
  }
}

TEST_CASE("dualizing a coalgebra pairs correctly") {
  auto d4 = *fixture("FIX_D4").comul;
  Algebra dual = dualize_coalgebra(d4);
  // [e1*, e2*] = -e3*, [e3*, e2*] = -e4*, everything else zero
  CHECK(dual.c.at(0, 1, 2) == Rat(-1));
  CHECK(dual.c.at(2, 1, 3) == Rat(-1));
  int nonzero = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (!dual.c.at(i, j, k).is_zero()) ++nonzero;
  CHECK(nonzero == 2);

  Coalgebra zero(3);
  CHECK(dualize_coalgebra(zero) == Algebra(3));

  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform(1, 4);
    Coalgebra c = rng.coalgebra(n);
    CHECK(dualize_algebra(dualize_coalgebra(c)) == c);
    Algebra a = rng.algebra(n);
    CHECK(dualize_coalgebra(dualize_algebra(a)) == a);
  }
}

TEST_CASE("exact rank and inverse") {
  Mat m(2, 2);
  m.at(0, 1) = Rat(1);
  m.at(1, 0) = Rat(-1);
  CHECK(exact_rank(m) == 2);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv * m) == Mat::identity(2));

  Mat sing(3, 3);
  sing.at(0, 0) = Rat(1);
  sing.at(1, 1) = Rat(1);
  CHECK(exact_rank(sing) == 2);
  CHECK(!inverse(sing).has_value());

  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.uniform(1, 5);
    Mat rm = rng.mat(n, n, 3);
    auto rinv = inverse(rm);
    if (rinv) {
      CHECK((*rinv * rm) == Mat::identity(n));
      CHECK(exact_rank(rm) == n);
    } else {
      CHECK(exact_rank(rm) < n);
    }
  }
}

TEST_CASE("every fixture loads and its claimed law holds") {
  for (const auto& info : fixture_catalog()) {
    if (info.parameterized) {
      for (long v : {0L, 1L, 2L, 3L, 5L}) CHECK_NOTHROW(fixture(info.name, Rat(v)));
    } else {
      CHECK_NOTHROW(fixture(info.name));
    }
  }
  CHECK_THROWS_AS(fixture("FIX_NOPE"), AliaError);
  CHECK_THROWS_AS(fixture("FIX_W4"), AliaError);  // lambda required

  for (const auto& claim : fixture_claims()) {
    std::vector<std::optional<Rat>> lambdas = {std::nullopt};
    for (const auto& name : claim.inputs)
      if (name == "FIX_W4" || name == "FIX_NL") {
        lambdas = {Rat(0), Rat(1), Rat(2), Rat(3), Rat(5)};
        break;
      }
    for (const auto& lambda : lambdas) {
      std::vector<StructureBundle> parts;
      for (const auto& name : claim.inputs) parts.push_back(fixture(name, lambda));
      StructureBundle merged = merge_bundles(parts);
      INFO("claim ", law_name(claim.law), " on ", claim.inputs.front());
      CHECK(run_law(merged, claim.law).passed());
    }
  }
}

TEST_CASE("dimension zero structures pass vacuously") {
  Algebra a(0);
  Coalgebra c(0);
  CHECK(check_left_alia(a).passed());
  CHECK(check_left_alia_coalgebra(c).passed());
  CHECK(check_nijenhuis_algebra(a, LinearMap(0)).passed());
  CHECK(check_bialgebra_compat(a, c).passed());
}
