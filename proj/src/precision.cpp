#include "orthogen/precision.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace orthogen {

template <>
double parse_real<double>(std::string_view text) {
  std::string s(text);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw std::invalid_argument("not a real number: " + s);
  return v;
}

template <>
Quad parse_real<Quad>(std::string_view text) {
  std::string s(text);
  char* end = nullptr;
  Quad v = strtoflt128(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw std::invalid_argument("not a real number: " + s);
  return v;
}

std::string format_real(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string format_real(Quad x, int digits) {
  char buf[96];
  quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, x);
  return buf;
}

}  // namespace orthogen
