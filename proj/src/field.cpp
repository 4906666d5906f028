#include "monobar/field.hpp"

#include <limits>

#include "monobar/error.hpp"

namespace monobar {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::int32_t>::max())
    throw InputError("field characteristic too large: " + std::to_string(p));
  if (!is_prime(p)) throw InputError("field characteristic is not prime: " + std::to_string(p));
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

} // namespace monobar
