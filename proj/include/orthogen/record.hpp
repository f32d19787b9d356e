#pragma once

// Versioned plain-text records. Each record is a header line
// "orthogen-record 1 <type>", one line per field ("name v1 v2 ..."), and a
// closing "end" line. Numbers carry 17 significant digits, so binary64
// values round-trip bit for bit.

#include <iosfwd>
#include <string>

#include "orthogen/core.hpp"
#include "orthogen/momentalg.hpp"

namespace orthogen {

inline constexpr int kRecordVersion = 1;

std::string to_record(const RecurrenceTable& t);
std::string to_record(const QuadratureRule& q);
std::string to_record(const MomentVector& m);

RecurrenceTable table_from_record(const std::string& text);
QuadratureRule rule_from_record(const std::string& text);
MomentVector moments_from_record(const std::string& text);

/// 17-significant-digit text form used by records and the CLI.
std::string format17(double x);

}  // namespace orthogen
