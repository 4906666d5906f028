#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace monobar {

using BigInt = boost::multiprecision::cpp_int;

} // namespace monobar
