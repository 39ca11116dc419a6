#ifndef CLAUSAL_TESTS_TEST_UTIL_HPP
#define CLAUSAL_TESTS_TEST_UTIL_HPP

#include <cmath>

// absolute-tolerance comparison, doctest's Approx is relative-only
inline bool within(double value, double target, double margin) {
  return std::abs(value - target) <= margin;
}

#endif
