#include "kml/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace kml {

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NonVerdict:
      break;
  }
  return "non-verdict";
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

void Report::finalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < checks.size(); ++i)
    if (checks[i].id == checks[i - 1].id) throw std::logic_error("duplicate check id " + checks[i].id);
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [v](const CheckResult& c) { return c.verdict == v; }));
}

int Report::exitCode(bool allowNonVerdict) const {
  if (count(Verdict::Fail) > 0) return 1;
  if (!allowNonVerdict && count(Verdict::NonVerdict) > 0) return 1;
  return 0;
}

Json Report::toJson(bool timings) const {
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json entry{{"id", c.id},
               {"parameters", c.parameters},
               {"window", c.window},
               {"verdict", verdictName(c.verdict)},
               {"witness", c.witness}};
    if (timings) entry["wall_ms"] = c.wallMs;
    list.push_back(std::move(entry));
  }
  return Json{{"schema", kReportSchema},
              {"tool_version", kToolVersion},
              {"suite", suite},
              {"seed", seed},
              {"summary",
               {{"pass", count(Verdict::Pass)}, {"fail", count(Verdict::Fail)}, {"non_verdict", count(Verdict::NonVerdict)}}},
              {"checks", std::move(list)}};
}

}  // namespace kml
