#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsusy/tier2.hpp"

namespace qsusy {

enum class Status { pass, fail, informational };

std::string to_string(Status s);

// One verified identity. `ref` locates the identity in the source derivation
// (equation label); `residual` is null on an exact pass and carries the
// measured error for tolerance checks.
struct CheckResult {
  std::string id;
  std::string ref;
  Status status = Status::fail;
  std::optional<std::string> residual;
};

using Report = std::vector<CheckResult>;

CheckResult make_check(std::string id, std::string ref, const EqualityReport& eq);
CheckResult make_check(std::string id, std::string ref, bool ok, const std::string& detail);
// Tolerance check; the measured error is kept whatever the outcome.
CheckResult make_measured_check(std::string id, std::string ref, bool ok, const std::string& measured);
// Displayed formula known to disagree with direct derivation: informational
// when it does not hold, pass when it does.
CheckResult make_known_typo_check(std::string id, std::string ref, const EqualityReport& eq, const std::string& note);

bool all_passed(const Report& r);
void append(Report& into, const Report& from);

// [{identity_id, paper_ref, status, residual}]
nlohmann::json to_json(const Report& r);

}  // namespace qsusy
