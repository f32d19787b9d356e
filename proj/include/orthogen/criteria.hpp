#pragma once

// The acceptance criteria, shared by the acceptance binary and the repro
// drivers of the command-line tool.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace orthogen::criteria {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string timing;  // wall-clock items, kept apart so reports stay reproducible

  void require(bool ok, const std::string& what);
  void require_timing(bool ok, const std::string& what);
  std::string summary() const;
};

struct Criterion {
  int id;
  const char* title;
  // `start` is when the surrounding suite began (for the overall time limit)
  std::function<Outcome(Clock::time_point start)> check;
};

const std::vector<Criterion>& all();

/// Runs one criterion; exceptions become a failed outcome.
Outcome run(const Criterion& c, Clock::time_point start = Clock::now());

}  // namespace orthogen::criteria
