#include "covertool/field.hpp"

#include <charconv>

#include "covertool/error.hpp"

namespace covertool {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw InvalidArgument("field characteristic " + std::to_string(p) +
                          " is not a prime below 2^31");
  }
  return Field(p);
}

Field Field::parse(std::string_view token) {
  if (token == "q" || token == "Q") return rationals();
  if (token.size() >= 2 && (token[0] == 'f' || token[0] == 'F')) {
    std::uint64_t p = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc{} && ptr == last && p < (1ULL << 31)) {
      return prime(static_cast<std::uint32_t>(p));
    }
  }
  throw InvalidArgument("field must be 'q' or 'f<p>', got '" +
                        std::string(token) + "'");
}

std::string Field::token() const {
  return is_rational() ? "q" : "f" + std::to_string(characteristic_);
}

}  // namespace covertool
