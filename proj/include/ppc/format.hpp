#pragma once

#include <charconv>
#include <string>

namespace ppc {

// Shortest decimal string that round-trips the double. Used everywhere a
// number is printed so repeated runs emit byte-identical files.
inline std::string fmt_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return {buf, ptr};
}

}  // namespace ppc
