#include "f2orbit/census.hpp"

#include <algorithm>

namespace f2orbit {

void OrbitCensus::sort_records() {
  std::sort(records.begin(), records.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.representative < b.representative;
  });
}

BigCount OrbitCensus::covered_states() const {
  BigCount total = 0;
  for (const auto& r : records) total += r.cardinality;
  return total;
}

}  // namespace f2orbit
