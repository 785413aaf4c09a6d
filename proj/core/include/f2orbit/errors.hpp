#pragma once

#include <stdexcept>
#include <string>

namespace f2orbit {

/// A request would exceed a fixed resource guard (state-space size,
/// enumeration dimension). Callers surface this as a refusal rather than
/// a crash.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed-form prediction was requested outside the range where one is
/// licensed (small n, missing E6 subgraph, ...).
class PredictionRefused : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input text (graph files, height strings) could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace f2orbit
