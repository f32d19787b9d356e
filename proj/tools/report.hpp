#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "orthogen/core.hpp"

namespace orthogen::cli {

using Json = nlohmann::ordered_json;

enum class Format { Table, Csv, Json, Record };

Format parse_format(const std::string& name);

/// One run of a coeffs or quad command.
struct Report {
  std::string command;
  Json params = Json::object();
  std::optional<RecurrenceTable> table;
  std::optional<QuadratureRule> rule;
  std::optional<int> ncap, kount, nu_used;
  Warnings warnings;
  // set when the computation failed
  std::optional<Warning> failure;
};

Json to_json(const Report& r);
void write_report(const Report& r, Format f, std::ostream& out);

/// Inverse of the JSON form for the numeric payload.
RecurrenceTable table_from_json(const Json& j);
QuadratureRule rule_from_json(const Json& j);

}  // namespace orthogen::cli
