#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace evenh {

// Exact arbitrary-precision integer used for all homology coefficients.
using Int = boost::multiprecision::cpp_int;

}  // namespace evenh
