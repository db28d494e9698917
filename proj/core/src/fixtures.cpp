#include "alia/fixtures.hpp"

namespace alia {

namespace {

Rat need_lambda(const std::string& name, const std::optional<Rat>& lambda) {
  if (!lambda) throw AliaError(Err::UnknownFixture, name + " requires a lambda value");
  return *lambda;
}

Algebra a4_bracket() {
  Algebra a(4);
  a.c.at(2, 0, 0) = Rat(1);  // [e3, e1] = e1
  a.c.at(3, 0, 2) = Rat(1);  // [e4, e1] = e3
  return a;
}

}  // namespace

StructureBundle fixture(const std::string& name, std::optional<Rat> lambda) {
  StructureBundle b;
  if (name == "FIX_A4") {
    b.dim = 4;
    b.bracket = a4_bracket();
  } else if (name == "FIX_N4") {
    b.dim = 4;
    LinearMap n(4);
    n.m.at(0, 0) = Rat(1);
    n.m.at(0, 1) = Rat(1);
    n.m.at(1, 1) = Rat(1);
    n.m.at(2, 2) = Rat(1);
    n.m.at(3, 3) = Rat(1);
    b.maps["N"] = n;
  } else if (name == "FIX_D4") {
    b.dim = 4;
    Coalgebra c(4);
    c.d.at(2, 0, 1) = Rat(-1);  // delta(e3) = -e1(x)e2
    c.d.at(3, 2, 1) = Rat(-1);  // delta(e4) = -e3(x)e2
    b.comul = c;
  } else if (name == "FIX_S4") {
    b.dim = 4;
    LinearMap s(4);
    s.m.at(0, 0) = Rat(1);
    s.m.at(0, 1) = Rat(-1);
    s.m.at(1, 1) = Rat(1);
    s.m.at(2, 2) = Rat(1);
    s.m.at(0, 3) = Rat(-1);
    s.m.at(3, 3) = Rat(1);
    b.maps["S"] = s;
  } else if (name == "FIX_r12") {
    b.dim = 4;
    TwoTensor r(4);
    r.t.at(0, 1) = Rat(1);
    r.t.at(1, 0) = Rat(-1);
    b.tensors["r"] = r;
  } else if (name == "FIX_r23") {
    b.dim = 4;
    TwoTensor r(4);
    r.t.at(1, 2) = Rat(1);
    r.t.at(2, 1) = Rat(-1);
    b.tensors["r"] = r;
  } else if (name == "FIX_D5") {
    b.dim = 4;
    Coalgebra c(4);
    c.d.at(0, 0, 1) = Rat(-1);
    c.d.at(0, 1, 0) = Rat(-1);
    b.comul = c;
  } else if (name == "FIX_W4") {
    b.dim = 4;
    Rat l = need_lambda(name, lambda);
    BilinearForm w(4);
    w.w.at(1, 3) = l;
    w.w.at(3, 1) = -l;
    b.forms["omega"] = w;
  } else if (name == "FIX_NL") {
    b.dim = 4;
    Rat l = need_lambda(name, lambda);
    LinearMap n(4);
    n.m.at(2, 3) = -l;
    b.maps["N"] = n;
  } else if (name == "FIX_DUAL2") {
    b.dim = 2;
    Algebra a(2);
    a.c.at(0, 0, 0) = Rat(1);
    a.c.at(0, 1, 1) = Rat(1);
    a.c.at(1, 0, 1) = Rat(1);
    b.bracket = a;
  } else if (name == "FIX_AB2") {
    b.dim = 2;
    b.bracket = Algebra(2);
    TwoTensor r(2);
    r.t.at(0, 1) = Rat(1);
    r.t.at(1, 0) = Rat(-1);
    b.tensors["r"] = r;
  } else if (name == "FIX_SL2") {
    b.dim = 3;
    Algebra a(3);
    a.c.at(0, 1, 1) = Rat(2);   // [h, e] = 2e
    a.c.at(1, 0, 1) = Rat(-2);
    a.c.at(0, 2, 2) = Rat(-2);  // [h, f] = -2f
    a.c.at(2, 0, 2) = Rat(2);
    a.c.at(1, 2, 0) = Rat(1);   // [e, f] = h
    a.c.at(2, 1, 0) = Rat(-1);
    b.bracket = a;
  } else {
    throw AliaError(Err::UnknownFixture, name);
  }
  return b;
}

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> catalog = {
      {"FIX_A4", false},  {"FIX_N4", false}, {"FIX_D4", false},    {"FIX_S4", false},
      {"FIX_r12", false}, {"FIX_r23", false}, {"FIX_D5", false},   {"FIX_W4", true},
      {"FIX_NL", true},   {"FIX_DUAL2", false}, {"FIX_AB2", false}, {"FIX_SL2", false},
  };
  return catalog;
}

const std::vector<FixtureClaim>& fixture_claims() {
  static const std::vector<FixtureClaim> claims = {
      {LawId::LeftAlia, {"FIX_A4"}},
      {LawId::LeftAlia, {"FIX_SL2"}},
      {LawId::LeftAlia, {"FIX_AB2"}},
      {LawId::LeftAliaCoalgebra, {"FIX_D4"}},
      {LawId::LeftAliaCoalgebra, {"FIX_D5"}},
      {LawId::NijenhuisAlgebra, {"FIX_A4", "FIX_N4"}},
      {LawId::NijenhuisAlgebra, {"FIX_A4", "FIX_NL"}},
      {LawId::NijenhuisCoalgebra, {"FIX_D4", "FIX_S4"}},
      {LawId::AdjointAdmissible, {"FIX_A4", "FIX_N4", "FIX_S4"}},
      {LawId::CoadjointAdmissible, {"FIX_D4", "FIX_S4", "FIX_N4"}},
      {LawId::BialgebraCompat, {"FIX_A4", "FIX_D4"}},
      {LawId::NijLeftAliaBialgebra, {"FIX_A4", "FIX_D4", "FIX_N4", "FIX_S4"}},
      {LawId::Ybe, {"FIX_A4", "FIX_r12"}},
      {LawId::Ybe, {"FIX_A4", "FIX_r23"}},
      {LawId::Ybe, {"FIX_AB2"}},
      {LawId::Symplectic, {"FIX_A4", "FIX_W4"}},
      {LawId::Cosymplectic, {"FIX_D5", "FIX_r23"}},
      {LawId::CoYbe, {"FIX_D5", "FIX_W4"}},
      {LawId::Associative, {"FIX_DUAL2"}},
      {LawId::Commutative, {"FIX_DUAL2"}},
  };
  return claims;
}

StructureBundle merge_bundles(const std::vector<StructureBundle>& parts) {
  StructureBundle out;
  for (const auto& p : parts) {
    if (out.dim == 0) out.dim = p.dim;
    if (p.dim != out.dim)
      throw AliaError(Err::DimensionMismatch, "cannot merge bundles of different dimension");
    if (p.bracket) out.bracket = p.bracket;
    if (p.comul) out.comul = p.comul;
    for (const auto& [k, v] : p.maps) out.maps[k] = v;
    for (const auto& [k, v] : p.tensors) out.tensors[k] = v;
    for (const auto& [k, v] : p.forms) out.forms[k] = v;
  }
  return out;
}

}  // namespace alia
