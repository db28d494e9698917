#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alia/rational.hpp"

namespace alia {

/// One identifier per checkable identity. Composite checks report entries
/// tagged with the sub-law they came from.
enum class LawId {
  LeftAlia,
  Associative,
  Commutative,
  Coassociative,
  Cocommutative,
  NijenhuisAlgebra,
  LeftAliaCoalgebra,
  NijenhuisCoalgebra,
  Representation,
  NijenhuisRepresentation,
  NijenhuisRepEll,   // Eq (8)-type identity for ell
  NijenhuisRepArr,   // Eq (9)-type identity for r
  Admissible,
  AdmissibleEll,
  AdmissibleArr,
  AdjointAdmissible,
  AdjointAdmissible1,
  AdjointAdmissible2,
  CoadjointAdmissible,
  CoadjointAdmissible1,
  CoadjointAdmissible2,
  BialgebraCompat,
  NijLeftAliaBialgebra,
  Quadratic,
  QuadSymmetric,
  QuadNondegenerate,
  QuadInvariant,
  Symplectic,
  SymplecticSkew,
  SymplecticIdentity,
  Cosymplectic,
  DBialgebra,
  DBialgebraCompat,
  NijenhuisDCompat,
  NijDCompatAlg,
  NijDCompatCoalg,
  SpecialBialgebraCondition,
  Ybe,
  Prop33,
  Prop33First,
  Prop33Second,
  SAdmissible,
  Prop37,
  Prop37Eq1,
  Prop37Eq2,
  Prop37Eq3,
  RelativeRotaBaxter,
  WeakRRB,
  WeakRRBLink,
  ThmBn,
  ThmBnArr,
  ThmBnEll,
  CoYbe,
  Prop53,
  Prop53First,
  Prop53Second,
};

/// Stable human/CLI name of a law (kebab-case).
const char* law_name(LawId id);
/// Inverse of law_name for top-level checkable laws.
std::optional<LawId> law_from_name(const std::string& name);
/// Names addressable as top-level laws, in declaration order.
std::vector<std::string> checkable_law_names();

/// One nonzero coordinate of an exactly evaluated identity.
/// Indices are 1-based basis indices; `part` names the sub-law for
/// composite checks (equal to the owning law otherwise).
struct ResidualEntry {
  LawId part;
  std::vector<int> index;
  Rat value;

  bool operator==(const ResidualEntry& o) const {
    return part == o.part && index == o.index && value == o.value;
  }
};

/// Exact residual of a law: empty entry list means the identity holds.
struct Residual {
  LawId law;
  std::vector<ResidualEntry> entries;

  bool passed() const { return entries.empty(); }
};

/// Accumulates nonzero coordinates, then freezes them in canonical order
/// (sub-law declaration order, then lexicographic multi-index).
class ResidualBuilder {
public:
  explicit ResidualBuilder(LawId law) : law_(law) {}

  void add(LawId part, std::vector<int> index_1based, Rat value);
  void add(std::vector<int> index_1based, Rat value);
  void merge(const Residual& sub);

  Residual freeze();

private:
  LawId law_;
  std::vector<ResidualEntry> entries_;
};

enum class Err {
  DimensionMismatch,
  RepInvalid,
  NotAntisymmetric,
  NotCommAssoc,
  NotCocommCoassoc,
  DBialgebraInvalid,
  NotAdjointAdmissible,
  DegenerateForm,
  DegenerateR,
  NotSkew,
  NotCoYbeSolution,
  HypothesisFailed,
  UnknownFixture,
  UnknownName,
  Syntax,
  UnboundParam,
  IndexOutOfRange,
  Usage,
};

const char* err_name(Err code);

class AliaError : public std::runtime_error {
public:
  AliaError(Err code, std::string detail);
  AliaError(Err code, std::string detail, LawId which);

  Err code() const { return code_; }
  std::optional<LawId> which() const { return which_; }

  /// True for malformed-input errors (CLI exit 2); false for failed
  /// mathematical hypotheses (CLI exit 1).
  bool is_input_error() const;

private:
  Err code_;
  std::optional<LawId> which_;
};

/// Parse error with position information.
class ParseError : public AliaError {
public:
  ParseError(Err code, std::string detail, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

}  // namespace alia
