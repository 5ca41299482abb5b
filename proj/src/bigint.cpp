#include "vilenkin/bigint.hpp"

#include <stdexcept>

namespace vilenkin {

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal integer");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid decimal integer: '" +
                                  std::string(text) + "'");
  return BigInt(std::string(text));
}

}  // namespace vilenkin
