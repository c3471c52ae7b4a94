#include "qsusy/report.hpp"

#include <algorithm>

namespace qsusy {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::informational: return "informational";
  }
  return "fail";
}

CheckResult make_check(std::string id, std::string ref, const EqualityReport& eq) {
  CheckResult c{std::move(id), std::move(ref), eq.equal ? Status::pass : Status::fail, std::nullopt};
  if (!eq.equal) c.residual = eq.describe();
  return c;
}

CheckResult make_check(std::string id, std::string ref, bool ok, const std::string& detail) {
  CheckResult c{std::move(id), std::move(ref), ok ? Status::pass : Status::fail, std::nullopt};
  if (!ok) c.residual = detail;
  return c;
}

CheckResult make_measured_check(std::string id, std::string ref, bool ok, const std::string& measured) {
  return {std::move(id), std::move(ref), ok ? Status::pass : Status::fail, measured};
}

CheckResult make_known_typo_check(std::string id, std::string ref, const EqualityReport& eq, const std::string& note) {
  CheckResult c{std::move(id), std::move(ref), eq.equal ? Status::pass : Status::informational, std::nullopt};
  if (!eq.equal) c.residual = note + "; " + eq.describe();
  return c;
}

bool all_passed(const Report& r) {
  return std::none_of(r.begin(), r.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

nlohmann::json to_json(const Report& r) {
  auto out = nlohmann::json::array();
  for (const auto& c : r) {
    out.push_back({{"identity_id", c.id},
                   {"paper_ref", c.ref},
                   {"status", to_string(c.status)},
                   {"residual", c.residual ? nlohmann::json(*c.residual) : nlohmann::json(nullptr)}});
  }
  return out;
}

}  // namespace qsusy
