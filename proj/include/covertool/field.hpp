#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace covertool {

// Coefficient field for homology: the rationals (characteristic 0) or a prime
// field F_p with p < 2^31. Tokens: "q" and "f<p>".
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);  // throws unless p is a prime < 2^31
  static Field parse(std::string_view token);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string token() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : characteristic_(p) {}

  std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace covertool
