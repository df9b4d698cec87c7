#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kml/report.hpp"

namespace kml::cli {

/// Parameters shared by every suite; unset optionals select the default grid.
struct SuiteOptions {
  std::uint64_t seed = 1;
  Ring base = Ring::integers();
  std::optional<std::size_t> truncation;
  std::optional<std::size_t> n, p, k, dim, count;
  std::string objectFile, submoduleFile, filtrationFile, moduleFile, cubeFile, matrixFile;
  std::vector<std::string> order;
};

/// Bad parameter combination (exit code 2, like schema errors).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& verifySuiteNames();
Report runVerify(const std::string& suite, const SuiteOptions& opt);
Report runCompute(const std::string& command, const SuiteOptions& opt);

}  // namespace kml::cli
