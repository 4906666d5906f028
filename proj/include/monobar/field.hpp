#pragma once

#include <cstdint>
#include <string>

namespace monobar {

/// Coefficient field for rank and homology computations: either the
/// rationals (exact, fraction-free elimination) or a prime field GF(p).
class FieldSpec {
public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static FieldSpec rational() { return FieldSpec(0); }
  /// Throws InputError unless p is prime and fits in 31 bits.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec default_field() { return FieldSpec(kDefaultPrime); }

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

} // namespace monobar
