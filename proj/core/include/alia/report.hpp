#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alia/residual.hpp"
#include "alia/types.hpp"

// Law dispatch over named bundle sections, plus deterministic report
// rendering and multi-point parameter certification.

namespace alia {

/// Sample points used to certify parameterized identities: every residual
/// the built-in corpus produces is polynomial of degree <= 4 per parameter,
/// so vanishing on this grid certifies identical vanishing.
inline constexpr long kCertifyPoints[] = {0, 1, 2, 3, 5};
inline constexpr int kParamDegreeBound = 4;

/// Runs a named law against a bundle, pulling the conventional sections:
/// bracket, comul, maps N/S/f/g/F/G/T/alpha, tensor r, forms omega/B.
/// Throws UNKNOWN_NAME when a required section is missing.
Residual run_law(const StructureBundle& b, LawId law);

struct CheckReport {
  std::string file;
  std::string law;
  bool passed = false;
  std::vector<ResidualEntry> entries;
};

CheckReport make_check_report(const std::string& file_label, LawId law,
                              const StructureBundle& b);

struct CertifyPointResult {
  std::string label;  // e.g. "lambda=2"
  bool passed = false;
  size_t residual_count = 0;
};

struct CertifyReport {
  std::string file;
  std::string law;
  std::vector<std::string> params;
  int degree_bound = kParamDegreeBound;
  bool certified = false;
  std::vector<CertifyPointResult> points;
  std::optional<std::string> witness;  // first failing point label
};

/// Evaluates the law at every grid point over the declared parameters.
/// With no parameters this degenerates to a single unlabeled run.
CertifyReport certify_law(const std::string& file_label, LawId law, const struct ParsedFile& raw);

std::string render_text(const CheckReport& r);
std::string render_json(const CheckReport& r);
std::string render_text(const CertifyReport& r);
std::string render_json(const CertifyReport& r);

}  // namespace alia
