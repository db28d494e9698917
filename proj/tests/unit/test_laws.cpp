#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "alia/constructions.hpp"
#include "alia/fixtures.hpp"
#include "alia/laws.hpp"
#include "gen.hpp"

using namespace alia;
using testgen::Rng;

namespace {

const Rat kPoints[] = {Rat(0), Rat(1), Rat(2), Rat(3), Rat(5)};

std::set<LawId> failing_parts(const Residual& r) {
  std::set<LawId> parts;
  for (const auto& e : r.entries) parts.insert(e.part);
  return parts;
}

}  // namespace

TEST_CASE("symmetric Jacobi identity") {
  CHECK(check_left_alia(*fixture("FIX_A4").bracket).passed());
  CHECK(check_left_alia(Algebra(3)).passed());
  CHECK(check_left_alia(*fixture("FIX_SL2").bracket).passed());

  // corrupting one structure constant breaks it
  Algebra bad = *fixture("FIX_SL2").bracket;
  bad.c.at(0, 1, 1) = Rat(3);  // [h, e] = 3e against [e, h] = -2e
  CHECK(!check_left_alia(bad).passed());
}

TEST_CASE("associativity and commutativity residuals") {
  auto dual2 = *fixture("FIX_DUAL2").bracket;
  CHECK(check_associative(dual2).passed());
  CHECK(check_commutative(dual2).passed());

  auto a4 = *fixture("FIX_A4").bracket;
  Residual comm = check_commutative(a4);
  CHECK(!comm.passed());
  bool found = false;
  for (const auto& e : comm.entries)
    if (e.index == std::vector<int>{3, 1, 1}) found = true;
  CHECK(found);

  CHECK(check_coassociative(Coalgebra(4)).passed());
  CHECK(check_cocommutative(Coalgebra(4)).passed());
}

TEST_CASE("Nijenhuis operator residual on an algebra") {
  auto a4 = *fixture("FIX_A4").bracket;
  CHECK(check_nijenhuis_algebra(a4, fixture("FIX_N4").maps.at("N")).passed());
  CHECK(check_nijenhuis_algebra(a4, LinearMap::identity(4)).passed());
  CHECK(check_nijenhuis_algebra(*fixture("FIX_SL2").bracket, LinearMap::identity(3)).passed());
  for (const Rat& l : kPoints)
    CHECK(check_nijenhuis_algebra(a4, fixture("FIX_NL", l).maps.at("N")).passed());
  CHECK_THROWS_AS(check_nijenhuis_algebra(a4, LinearMap(3)), AliaError);

  // negative: a map mixing e1 into the bracket's support unevenly
  LinearMap bad(4);
  bad.m.at(0, 2) = Rat(1);  // N(e3) = e1, everything else 0
  CHECK(!check_nijenhuis_algebra(a4, bad).passed());
}

TEST_CASE("left Alia coalgebra residual") {
  CHECK(check_left_alia_coalgebra(*fixture("FIX_D4").comul).passed());
  CHECK(check_left_alia_coalgebra(Coalgebra(4)).passed());
  CHECK(check_left_alia_coalgebra(*fixture("FIX_D5").comul).passed());
}

TEST_CASE("Nijenhuis operator residual on a coalgebra") {
  auto d4 = *fixture("FIX_D4").comul;
  CHECK(check_nijenhuis_coalgebra(d4, fixture("FIX_S4").maps.at("S")).passed());
  CHECK(check_nijenhuis_coalgebra(d4, LinearMap::identity(4)).passed());

  // dual consistency with the algebra-side law
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform(1, 3);
    Coalgebra c = rng.coalgebra(n);
    LinearMap s = rng.map(n);
    CHECK(check_nijenhuis_coalgebra(c, s).passed() ==
          check_nijenhuis_algebra(dualize_coalgebra(c), dual_map(s)).passed());
  }
}

TEST_CASE("representation residual") {
  auto a4 = *fixture("FIX_A4").bracket;
  CHECK(check_representation(a4, left_right_operators(a4)).passed());

  Representation zero(4, 2);
  CHECK(check_representation(a4, zero).passed());

  // a Lie-algebra representation rho gives both (rho, -rho) and (rho, 2*rho)
  auto sl2 = *fixture("FIX_SL2").bracket;
  Representation ad = left_right_operators(sl2);
  Representation minus(3, 3), twice(3, 3);
  for (int i = 0; i < 3; ++i) {
    minus.ell[i] = ad.ell[i];
    minus.arr[i] = Rat(-1) * ad.ell[i];
    twice.ell[i] = ad.ell[i];
    twice.arr[i] = Rat(2) * ad.ell[i];
  }
  CHECK(check_representation(sl2, minus).passed());
  CHECK(check_representation(sl2, twice).passed());
}

TEST_CASE("Nijenhuis representation residual") {
  auto a4 = *fixture("FIX_A4").bracket;
  auto n4 = fixture("FIX_N4").maps.at("N");
  Representation ad = left_right_operators(a4);
  CHECK(check_nijenhuis_representation(a4, n4, ad, n4).passed());

  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Algebra a = testgen::symmetric_special_left_alia(rng, 3);
    Representation rep(a.dim, 2);
    for (int i = 0; i < a.dim; ++i) rep.ell[i] = rep.arr[i] = rng.mat(2, 2);
    REQUIRE(check_representation(a, rep).passed());
    // alpha = N = identity always satisfies both identities
    CHECK(check_nijenhuis_representation(a, LinearMap::identity(a.dim), rep,
                                         LinearMap::identity(2))
              .passed());
    // alpha = 0: every summand carries an alpha factor
    CHECK(check_nijenhuis_representation(a, rng.map(a.dim), rep, LinearMap::zero(2)).passed());
  }

  // an invalid representation is rejected up front
  Representation bad = left_right_operators(a4);
  bad.arr[2].at(0, 0) = Rat(5);
  REQUIRE(!check_representation(a4, bad).passed());
  CHECK_THROWS_AS(check_nijenhuis_representation(a4, n4, bad, n4), AliaError);
}

TEST_CASE("admissibility residual") {
  Rng rng(23);
  // beta = identity cancels everything
  for (int trial = 0; trial < 10; ++trial) {
    Algebra a = testgen::symmetric_special_left_alia(rng, 3);
    Representation rep(a.dim, 2);
    for (int i = 0; i < a.dim; ++i) rep.ell[i] = rep.arr[i] = rng.mat(2, 2);
    CHECK(check_admissible(a, rng.map(a.dim), rep, LinearMap::identity(2)).passed());
  }
  // adjoint specialization agrees with the bracket-level check
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform(1, 3);
    Algebra a = rng.algebra(n);
    LinearMap nm = rng.map(n), s = rng.map(n);
    CHECK(check_admissible(a, nm, left_right_operators(a), s).passed() ==
          check_adjoint_admissible(a, nm, s).passed());
  }
  // dual consistency: beta admissible iff beta* is a Nijenhuis-representation
  // map on (V*, ell*, ell* - r*)
  for (int trial = 0; trial < 50; ++trial) {
    Algebra a = testgen::symmetric_special_left_alia(rng, 3);
    int m = rng.uniform(1, 3);
    Representation rep(a.dim, m);
    for (int i = 0; i < a.dim; ++i) rep.ell[i] = rep.arr[i] = rng.mat(m, m);
    LinearMap nm = rng.map(a.dim), beta = rng.map(m);
    Representation dual = dual_representation(rep);
    CHECK(check_admissible(a, nm, rep, beta).passed() ==
          check_nijenhuis_representation(a, nm, dual, dual_map(beta)).passed());
  }
}

TEST_CASE("adjoint admissibility residual") {
  auto a4 = *fixture("FIX_A4").bracket;
  auto n4 = fixture("FIX_N4").maps.at("N");
  auto s4 = fixture("FIX_S4").maps.at("S");
  CHECK(check_adjoint_admissible(a4, n4, s4).passed());
  CHECK(check_adjoint_admissible(a4, LinearMap::identity(4), LinearMap::identity(4)).passed());
  CHECK(check_adjoint_admissible(a4, LinearMap::zero(4), LinearMap::zero(4)).passed());
}

TEST_CASE("coadjoint admissibility residual") {
  auto d4 = *fixture("FIX_D4").comul;
  auto n4 = fixture("FIX_N4").maps.at("N");
  auto s4 = fixture("FIX_S4").maps.at("S");
  CHECK(check_coadjoint_admissible(d4, s4, n4).passed());
  CHECK(check_coadjoint_admissible(d4, LinearMap::identity(4), LinearMap::identity(4)).passed());

  Rng rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform(1, 3);
    Coalgebra c = rng.coalgebra(n);
    LinearMap s = rng.map(n), nm = rng.map(n);
    CHECK(check_coadjoint_admissible(c, s, nm).passed() ==
          check_adjoint_admissible(dualize_coalgebra(c), dual_map(s), dual_map(nm)).passed());
  }
}

TEST_CASE("bialgebra compatibility residual") {
  auto a4 = *fixture("FIX_A4").bracket;
  CHECK(check_bialgebra_compat(a4, *fixture("FIX_D4").comul).passed());
  CHECK(check_bialgebra_compat(a4, Coalgebra(4)).passed());
  CHECK(check_bialgebra_compat(a4, *fixture("FIX_D5").comul).passed());
}

TEST_CASE("full bialgebra check aggregates and localizes sub-laws") {
  auto a4 = *fixture("FIX_A4").bracket;
  auto d4 = *fixture("FIX_D4").comul;
  auto n4 = fixture("FIX_N4").maps.at("N");
  auto s4 = fixture("FIX_S4").maps.at("S");
  CHECK(check_nijenhuis_left_alia_bialgebra(a4, d4, n4, s4).passed());
  CHECK(check_nijenhuis_left_alia_bialgebra(Algebra(3), Coalgebra(3), LinearMap::zero(3),
                                            LinearMap::zero(3))
            .passed());

  // On this fixture the identity map happens to satisfy every condition:
  // the bracket's range is fixed pointwise by N and (id - N)^2 kills the
  // comultiplication legs, so S := id is NOT a corruption here.
  CHECK(check_nijenhuis_left_alia_bialgebra(a4, d4, n4, LinearMap::identity(4)).passed());

  // An effective corruption: redirect S on e1. Items (c), (d), (e) all break
  // and the report names each failing sub-law.
  LinearMap sc = s4;
  sc.m.at(0, 0) = Rat(0);
  sc.m.at(1, 0) = Rat(1);
  Residual bad = check_nijenhuis_left_alia_bialgebra(a4, d4, n4, sc);
  CHECK(!bad.passed());
  std::set<LawId> parts = failing_parts(bad);
  CHECK(parts == std::set<LawId>{LawId::NijenhuisCoalgebra, LawId::AdjointAdmissible1,
                                 LawId::AdjointAdmissible2, LawId::CoadjointAdmissible1});
}

TEST_CASE("quadratic form residual") {
  auto a4 = *fixture("FIX_A4").bracket;
  BilinearForm zero(4);
  Residual r = check_quadratic(a4, zero);
  CHECK(!r.passed());
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].part == LawId::QuadNondegenerate);
  CHECK(r.entries[0].value == Rat(4));  // rank deficiency

  CHECK(check_quadratic(Algebra(0), BilinearForm(0)).passed());

  // natural form on the double of the 4-dimensional bialgebra
  auto dbl = drinfeld_double(a4, *fixture("FIX_D4").comul, std::nullopt, std::nullopt);
  CHECK(check_quadratic(dbl.big, dbl.form).passed());
}

TEST_CASE("symplectic residual") {
  auto a4 = *fixture("FIX_A4").bracket;
  for (const Rat& l : kPoints)
    CHECK(check_symplectic(a4, fixture("FIX_W4", l).forms.at("omega")).passed());
  CHECK(check_symplectic(a4, BilinearForm(4)).passed());

  auto ab2 = fixture("FIX_AB2");
  BilinearForm w(2);
  w.w.at(0, 1) = Rat(1);
  w.w.at(1, 0) = Rat(-1);
  CHECK(check_symplectic(*ab2.bracket, w).passed());

  BilinearForm notskew(4);
  notskew.w.at(0, 0) = Rat(1);
  Residual r = check_symplectic(a4, notskew);
  CHECK(failing_parts(r).count(LawId::SymplecticSkew));
}

TEST_CASE("cosymplectic residual") {
  auto d5 = *fixture("FIX_D5").comul;
  auto r23 = fixture("FIX_r23").tensors.at("r");
  CHECK(check_cosymplectic(d5, r23).passed());
  CHECK(check_cosymplectic(Coalgebra(4), r23).passed());
  CHECK(check_cosymplectic(d5, TwoTensor(4)).passed());

  TwoTensor sym(4);
  sym.t.at(0, 1) = Rat(1);
  sym.t.at(1, 0) = Rat(1);
  CHECK_THROWS_AS(check_cosymplectic(d5, sym), AliaError);

  // negatives: tensors whose legs hit the comultiplication supports
  auto d4 = *fixture("FIX_D4").comul;
  TwoTensor r34(4);
  r34.t.at(2, 3) = Rat(1);
  r34.t.at(3, 2) = Rat(-1);
  CHECK(!check_cosymplectic(d4, r34).passed());
  CHECK(!check_cosymplectic(d5, fixture("FIX_r12").tensors.at("r")).passed());
}

TEST_CASE("D-bialgebra residual") {
  auto dual2 = *fixture("FIX_DUAL2").bracket;
  CHECK(check_d_bialgebra(dual2, Coalgebra(2)).passed());

  // the socle comultiplication delta(e2) = e2 (x) e2 is compatible
  Coalgebra socle(2);
  socle.d.at(1, 1, 1) = Rat(1);
  CHECK(check_d_bialgebra(dual2, socle).passed());

  // delta(e1) = e1 (x) e1 is NOT: delta(e1*e1) = e1(x)e1 but the right side
  // doubles it
  Coalgebra bad(2);
  bad.d.at(0, 0, 0) = Rat(1);
  Residual r = check_d_bialgebra(dual2, bad);
  CHECK(!r.passed());
  bool found = false;
  for (const auto& e : r.entries)
    if (e.part == LawId::DBialgebraCompat && e.index == std::vector<int>{1, 1, 1, 1} &&
        e.value == Rat(-1))
      found = true;
  CHECK(found);

  // one-dimensional unit algebra with delta(e1) = e1 (x) e1
  Algebra one(1);
  one.c.at(0, 0, 0) = Rat(1);
  Coalgebra onec(1);
  onec.d.at(0, 0, 0) = Rat(1);
  Residual r1 = check_d_bialgebra(one, onec);
  REQUIRE(r1.entries.size() == 1);
  CHECK(r1.entries[0].index == std::vector<int>{1, 1, 1, 1});
  CHECK(r1.entries[0].value == Rat(-1));
}

TEST_CASE("Nijenhuis D-compatibility residual") {
  auto dual2 = *fixture("FIX_DUAL2").bracket;
  Coalgebra zero(2);
  CHECK(check_nijenhuis_d_compat(dual2, zero, LinearMap::identity(2), LinearMap::identity(2))
            .passed());
  CHECK(check_nijenhuis_d_compat(dual2, zero, LinearMap::zero(2), LinearMap::zero(2)).passed());

  LinearMap mult_t(2);
  mult_t.m.at(1, 0) = Rat(1);  // e1 -> e2, e2 -> 0
  CHECK(check_nijenhuis_d_compat(dual2, zero, mult_t, mult_t).passed());
}

TEST_CASE("special bialgebra condition") {
  Rng rng(8);
  // (F, G) = (g, f) kills the display for any commutative cocommutative
  // D-bialgebra and arbitrary f, g
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = testgen::random_comm_assoc(rng, 4);
    std::vector<Rat> weights;
    for (size_t b = 0; b < inst.block_sizes.size(); ++b) weights.push_back(rng.rat());
    Coalgebra delta = testgen::socle_comultiplication(inst.block_sizes, weights);
    REQUIRE(check_d_bialgebra(inst.product, delta).passed());
    LinearMap f = rng.map(inst.product.dim), g = rng.map(inst.product.dim);
    CHECK(check_special_bialgebra_condition(inst.product, delta, f, g, g, f).passed());
  }

  auto dual2 = *fixture("FIX_DUAL2").bracket;
  Coalgebra zero(2);
  LinearMap z = LinearMap::zero(2), id = LinearMap::identity(2);
  CHECK(check_special_bialgebra_condition(dual2, zero, z, z, z, z).passed());
  CHECK(check_special_bialgebra_condition(dual2, zero, id, id, id, id).passed());

  Algebra notcomm(2);
  notcomm.c.at(0, 1, 0) = Rat(1);
  CHECK_THROWS_AS(check_special_bialgebra_condition(notcomm, zero, z, z, z, z), AliaError);

  // negative: with independent (F, G) the condition fails on a sizable
  // fraction of random instances
  int fails = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = testgen::random_comm_assoc(rng, 4);
    std::vector<Rat> weights;
    for (size_t b = 0; b < inst.block_sizes.size(); ++b) weights.push_back(rng.rat());
    Coalgebra delta = testgen::socle_comultiplication(inst.block_sizes, weights);
    int n = inst.product.dim;
    if (!check_special_bialgebra_condition(inst.product, delta, rng.map(n), rng.map(n),
                                           rng.map(n), rng.map(n))
             .passed())
      ++fails;
  }
  CHECK(fails > 0);
}

TEST_CASE("algebra laws transfer through duality") {
  Rng rng(64);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform(1, 4);
    Coalgebra c = rng.coalgebra(n);
    Algebra a = dualize_coalgebra(c);
    CHECK(check_left_alia_coalgebra(c).passed() == check_left_alia(a).passed());
    CHECK(check_cocommutative(c).passed() == check_commutative(a).passed());
    CHECK(check_coassociative(c).passed() == check_associative(a).passed());
  }
}

TEST_CASE("Nijenhuis transfer to special brackets") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = testgen::random_comm_assoc(rng, 4);
    REQUIRE(check_nijenhuis_algebra(inst.product, inst.f).passed());
    Algebra special = special_left_alia(inst.product, inst.f, inst.g);
    // f stays Nijenhuis on the derived bracket, and so does g
    CHECK(check_nijenhuis_algebra(special, inst.f).passed());
    CHECK(check_nijenhuis_algebra(special, inst.g).passed());
  }
}

TEST_CASE("coalgebra mirror of the Nijenhuis transfer") {
  Rng rng(100);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = testgen::random_comm_assoc(rng, 4);
    Coalgebra c = dualize_algebra(inst.product);
    LinearMap bigF = dual_map(inst.f), bigG = dual_map(inst.g);
    Coalgebra special = special_left_alia_coalgebra(c, bigF, bigG);
    CHECK(check_nijenhuis_coalgebra(special, bigF).passed());
    CHECK(check_nijenhuis_coalgebra(special, bigG).passed());
  }
}
