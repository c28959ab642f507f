#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cftp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace cftp
