#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "alia/residual.hpp"
#include "alia/types.hpp"

// Line-oriented exchange format ('#' starts a comment):
//
//   dim N
//   param NAME
//   bracket i j = c*k [+ c*k ...]
//   comul i = c*(j,k) [+ ...]
//   map NAME = c*(i<-j) [+ ...]        c = coefficient of e_i in the image of e_j
//   tensor NAME = c*(i,j) [+ ...]
//   form NAME = c*(i,j) [+ ...]
//
// Indices are 1-based and must lie in 1..N. A coefficient c is a product of
// rationals (p or p/q) and declared parameter names, optionally signed.
// The emitter produces a canonical, byte-deterministic rendering with all
// rationals in lowest terms and positive denominators.

namespace alia {

/// One product of a rational constant with declared parameter names.
struct Monomial {
  Rat constant;
  std::vector<std::string> params;
};

/// Parse result before parameter substitution.
struct ParsedFile {
  struct Entry {
    Monomial coeff;
    std::array<int, 3> idx;  // 0-based; unused trailing slots are -1
  };

  int dim = 0;
  std::vector<std::string> params;
  bool has_bracket = false;
  bool has_comul = false;
  std::vector<Entry> bracket;  // {i, j, k}
  std::vector<Entry> comul;    // {i, j, k}
  std::map<std::string, std::vector<Entry>> maps;     // {i, j, -1}
  std::map<std::string, std::vector<Entry>> tensors;  // {i, j, -1}
  std::map<std::string, std::vector<Entry>> forms;    // {i, j, -1}
};

using ParamBindings = std::map<std::string, Rat>;

/// Raw parse; reports SYNTAX and INDEX_OUT_OF_RANGE with line/column.
ParsedFile parse_raw(const std::string& text);

/// Substitutes parameters; throws UNBOUND_PARAM for a declared parameter
/// with no binding.
StructureBundle resolve(const ParsedFile& file, const ParamBindings& bindings);

/// parse_raw followed by resolve.
StructureBundle parse_structure(const std::string& text, const ParamBindings& bindings = {});

/// Canonical emitter; parse_structure(emit_structure(b)) == b.
std::string emit_structure(const StructureBundle& b);

}  // namespace alia
