#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "f2orbit/actions.hpp"
#include "f2orbit/bigcount.hpp"
#include "f2orbit/f2vector.hpp"

namespace f2orbit {

struct OrbitRecord {
  F2Vector representative;  // numerically smallest member
  BigCount cardinality;
  std::optional<Height> height;
  std::string type_label;  // empty until labelled

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// Deterministic partition summary of a state space (or one stratum of it).
struct OrbitCensus {
  std::string descriptor;  // e.g. "first n=6" or "graph V=10"
  std::string kind;        // first|first-conj|second|second-conj|graph
  int n = 0;               // order n for G_n-actions, vertex count for graphs
  std::size_t state_dim = 0;
  BigCount total_states;   // states covered by the records
  std::vector<OrbitRecord> records;

  std::size_t orbit_count() const noexcept { return records.size(); }
  /// Sorts records by (height, representative); records without a height
  /// sort before those with one.
  void sort_records();
  /// Sum of cardinalities.
  BigCount covered_states() const;

  friend bool operator==(const OrbitCensus&, const OrbitCensus&) = default;
};

}  // namespace f2orbit
