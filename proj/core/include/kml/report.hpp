#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kml/json_io.hpp"

namespace kml {

inline constexpr const char* kReportSchema = "kml-report/1";
inline constexpr const char* kToolVersion = "0.3.0";

enum class Verdict { Pass, Fail, NonVerdict };

std::string verdictName(Verdict v);

struct CheckResult {
  std::string id;
  Json parameters = Json::object();
  Json window;  // null when the check has no search window
  Verdict verdict = Verdict::Pass;
  Json witness = Json::object();
  double wallMs = 0.0;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void append(const Report& other);
  /// Sorts by check id; ids must be unique.
  void finalize();
  std::size_t count(Verdict v) const;
  /// 0 when everything passed (non-verdicts allowed on request), else 1.
  int exitCode(bool allowNonVerdict) const;
  /// wall_ms is only emitted with `timings`, keeping the default output reproducible.
  Json toJson(bool timings = false) const;
};

}  // namespace kml
