#include "slr/extended_real.hpp"

#include <charconv>
#include <cmath>

#include "slr/error.hpp"

namespace slr {

double ExtendedReal::value() const {
  if (infinite_) throw Error(ErrorKind::InvalidArgument, "extended_real", "value() of infinity");
  return value_;
}

std::string ExtendedReal::to_string() const {
  return infinite_ ? std::string("inf") : format_double(value_);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

}  // namespace slr
