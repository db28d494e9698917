#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alia/residual.hpp"
#include "alia/types.hpp"

namespace alia {

/// Built-in structures used across the test corpus and the CLI example files.
///
/// FIX_A4    4-dim bracket: [e3,e1] = e1, [e4,e1] = e3, all else 0
/// FIX_N4    N: e1->e1, e2->e1+e2, e3->e3, e4->e4
/// FIX_D4    comul: delta(e3) = -e1(x)e2, delta(e4) = -e3(x)e2
/// FIX_S4    S: e1->e1, e2->e2-e1, e3->e3, e4->e4-e1
/// FIX_r12   r = e1(x)e2 - e2(x)e1 in dim 4
/// FIX_r23   r = e2(x)e3 - e3(x)e2 in dim 4
/// FIX_D5    comul: delta(e1) = -e1(x)e2 - e2(x)e1
/// FIX_W4    omega(e2,e4) = lambda = -omega(e4,e2)          (parameterized)
/// FIX_NL    N: e4 -> -lambda e3, all else 0                (parameterized)
/// FIX_DUAL2 2-dim truncated polynomial product: e1 the unit, e2*e2 = 0
/// FIX_AB2   2-dim zero bracket with r = e1(x)e2 - e2(x)e1
/// FIX_SL2   sl2 bracket on (h,e,f) = (e1,e2,e3)
StructureBundle fixture(const std::string& name, std::optional<Rat> lambda = std::nullopt);

struct FixtureClaim {
  LawId law;
  std::vector<std::string> inputs;  // fixtures merged, in argument order
};

struct FixtureInfo {
  std::string name;
  bool parameterized;
};

const std::vector<FixtureInfo>& fixture_catalog();
/// The law each fixture (or fixture combination) is claimed to satisfy.
const std::vector<FixtureClaim>& fixture_claims();

/// Union of several bundles over the same dimension; later sections win.
StructureBundle merge_bundles(const std::vector<StructureBundle>& parts);

}  // namespace alia
