#include "alia/residual.hpp"

#include <algorithm>
#include <utility>

namespace alia {

namespace {

struct LawNameRow {
  LawId id;
  const char* name;
  bool checkable;  // addressable from the CLI as a top-level law
};

const LawNameRow kLawNames[] = {
    {LawId::LeftAlia, "left-alia", true},
    {LawId::Associative, "associative", true},
    {LawId::Commutative, "commutative", true},
    {LawId::Coassociative, "coassociative", true},
    {LawId::Cocommutative, "cocommutative", true},
    {LawId::NijenhuisAlgebra, "nijenhuis-algebra", true},
    {LawId::LeftAliaCoalgebra, "left-alia-coalgebra", true},
    {LawId::NijenhuisCoalgebra, "nijenhuis-coalgebra", true},
    {LawId::Representation, "representation", false},
    {LawId::NijenhuisRepresentation, "nijenhuis-representation", false},
    {LawId::NijenhuisRepEll, "nijenhuis-representation-ell", false},
    {LawId::NijenhuisRepArr, "nijenhuis-representation-arr", false},
    {LawId::Admissible, "admissible", false},
    {LawId::AdmissibleEll, "admissible-ell", false},
    {LawId::AdmissibleArr, "admissible-arr", false},
    {LawId::AdjointAdmissible, "adjoint-admissible", true},
    {LawId::AdjointAdmissible1, "adjoint-admissible-1", false},
    {LawId::AdjointAdmissible2, "adjoint-admissible-2", false},
    {LawId::CoadjointAdmissible, "coadjoint-admissible", true},
    {LawId::CoadjointAdmissible1, "coadjoint-admissible-1", false},
    {LawId::CoadjointAdmissible2, "coadjoint-admissible-2", false},
    {LawId::BialgebraCompat, "bialgebra-compat", true},
    {LawId::NijLeftAliaBialgebra, "nijenhuis-bialgebra", true},
    {LawId::Quadratic, "quadratic", true},
    {LawId::QuadSymmetric, "quadratic-symmetric", false},
    {LawId::QuadNondegenerate, "quadratic-nondegenerate", false},
    {LawId::QuadInvariant, "quadratic-invariant", false},
    {LawId::Symplectic, "symplectic", true},
    {LawId::SymplecticSkew, "symplectic-skew", false},
    {LawId::SymplecticIdentity, "symplectic-identity", false},
    {LawId::Cosymplectic, "cosymplectic", true},
    {LawId::DBialgebra, "d-bialgebra", true},
    {LawId::DBialgebraCompat, "d-bialgebra-compat", false},
    {LawId::NijenhuisDCompat, "nijenhuis-d-compat", true},
    {LawId::NijDCompatAlg, "nijenhuis-d-compat-alg", false},
    {LawId::NijDCompatCoalg, "nijenhuis-d-compat-coalg", false},
    {LawId::SpecialBialgebraCondition, "special-bialgebra-condition", true},
    {LawId::Ybe, "ybe", true},
    {LawId::Prop33, "delta-r-compat", true},
    {LawId::Prop33First, "delta-r-compat-1", false},
    {LawId::Prop33Second, "delta-r-compat-2", false},
    {LawId::SAdmissible, "s-admissible", true},
    {LawId::Prop37, "nijenhuis-ybe-compat", true},
    {LawId::Prop37Eq1, "nijenhuis-ybe-compat-1", false},
    {LawId::Prop37Eq2, "nijenhuis-ybe-compat-2", false},
    {LawId::Prop37Eq3, "nijenhuis-ybe-compat-3", false},
    {LawId::RelativeRotaBaxter, "relative-rota-baxter", true},
    {LawId::WeakRRB, "weak-rota-baxter", true},
    {LawId::WeakRRBLink, "weak-rota-baxter-link", false},
    {LawId::ThmBn, "semidirect-admissible", false},
    {LawId::ThmBnArr, "semidirect-admissible-arr", false},
    {LawId::ThmBnEll, "semidirect-admissible-ell", false},
    {LawId::CoYbe, "co-ybe", true},
    {LawId::Prop53, "bracket-omega-compat", true},
    {LawId::Prop53First, "bracket-omega-compat-1", false},
    {LawId::Prop53Second, "bracket-omega-compat-2", false},
};

}  // namespace

const char* law_name(LawId id) {
  for (const auto& row : kLawNames)
    if (row.id == id) return row.name;
  return "?";
}

std::optional<LawId> law_from_name(const std::string& name) {
  for (const auto& row : kLawNames)
    if (row.checkable && name == row.name) return row.id;
  return std::nullopt;
}

std::vector<std::string> checkable_law_names() {
  std::vector<std::string> out;
  for (const auto& row : kLawNames)
    if (row.checkable) out.push_back(row.name);
  return out;
}

void ResidualBuilder::add(LawId part, std::vector<int> index_1based, Rat value) {
  if (value.is_zero()) return;
  entries_.push_back(ResidualEntry{part, std::move(index_1based), std::move(value)});
}

void ResidualBuilder::add(std::vector<int> index_1based, Rat value) {
  add(law_, std::move(index_1based), std::move(value));
}

void ResidualBuilder::merge(const Residual& sub) {
  for (const auto& e : sub.entries) entries_.push_back(e);
}

Residual ResidualBuilder::freeze() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const ResidualEntry& a, const ResidualEntry& b) {
                     if (a.part != b.part) return int(a.part) < int(b.part);
                     return a.index < b.index;
                   });
  return Residual{law_, std::move(entries_)};
}

const char* err_name(Err code) {
  switch (code) {
    case Err::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Err::RepInvalid: return "REP_INVALID";
    case Err::NotAntisymmetric: return "NOT_ANTISYMMETRIC";
    case Err::NotCommAssoc: return "NOT_COMM_ASSOC";
    case Err::NotCocommCoassoc: return "NOT_COCOMM_COASSOC";
    case Err::DBialgebraInvalid: return "D_BIALGEBRA_INVALID";
    case Err::NotAdjointAdmissible: return "NOT_ADJOINT_ADMISSIBLE";
    case Err::DegenerateForm: return "DEGENERATE_FORM";
    case Err::DegenerateR: return "DEGENERATE_R";
    case Err::NotSkew: return "NOT_SKEW";
    case Err::NotCoYbeSolution: return "NOT_CO_YBE_SOLUTION";
    case Err::HypothesisFailed: return "HYPOTHESIS_FAILED";
    case Err::UnknownFixture: return "UNKNOWN_FIXTURE";
    case Err::UnknownName: return "UNKNOWN_NAME";
    case Err::Syntax: return "SYNTAX";
    case Err::UnboundParam: return "UNBOUND_PARAM";
    case Err::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case Err::Usage: return "USAGE";
  }
  return "?";
}

AliaError::AliaError(Err code, std::string detail)
    : std::runtime_error(std::string(err_name(code)) + ": " + detail), code_(code) {}

AliaError::AliaError(Err code, std::string detail, LawId which)
    : std::runtime_error(std::string(err_name(code)) + "(" + law_name(which) + "): " + detail),
      code_(code),
      which_(which) {}

bool AliaError::is_input_error() const {
  switch (code_) {
    case Err::UnknownFixture:
    case Err::UnknownName:
    case Err::Syntax:
    case Err::UnboundParam:
    case Err::IndexOutOfRange:
    case Err::DimensionMismatch:
    case Err::Usage:
      return true;
    default:
      return false;
  }
}

ParseError::ParseError(Err code, std::string detail, int line, int col)
    : AliaError(code, detail + " (line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ")"),
      line_(line),
      col_(col) {}

}  // namespace alia
