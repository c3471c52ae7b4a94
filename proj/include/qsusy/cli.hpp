#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsusy/report.hpp"

namespace qsusy::cli {

// Exit codes: 0 every check passed (informational entries allowed),
// 1 some check failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// {schema, command, inputs, results, summary[, data]}
nlohmann::json make_document(const std::string& command, const nlohmann::json& inputs, const Report& report,
                             const nlohmann::json& data = nullptr);

// Sorted equation numbers and section labels referenced by the report.
nlohmann::json coverage_manifest(const Report& report);

}  // namespace qsusy::cli
