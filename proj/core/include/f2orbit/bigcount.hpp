#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace f2orbit {

/// Exact unbounded integer used for every cardinality and orbit count.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount pow2(unsigned exponent) {
  BigCount r = 1;
  r <<= exponent;
  return r;
}

inline std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace f2orbit
