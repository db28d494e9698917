#pragma once

#include <string>
#include <vector>

namespace alia {

/// A shipped .alia example file: canonical bytes plus a one-line summary.
struct ExampleFile {
  std::string name;     // e.g. "ex217.alia"
  std::string summary;
  std::string text;
};

const std::vector<ExampleFile>& builtin_examples();

}  // namespace alia
