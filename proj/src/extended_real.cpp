#include "gsp/extended_real.hpp"

#include <array>
#include <charconv>

namespace gsp {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string to_string(ExtendedReal x) { return format_double(x.value()); }

}  // namespace gsp
