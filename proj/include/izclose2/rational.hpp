#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace izclose2 {

// Exact rational scalar used throughout. All linear algebra and polynomial
// arithmetic is over Q; there are no tolerances anywhere in this library.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_zero(const Rat& r) { return r == 0; }

} // namespace izclose2
