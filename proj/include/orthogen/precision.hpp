#pragma once

// Scalar support for the two precisions the library is instantiated with:
// binary64 (the public working precision) and binary128 (used for
// extended-precision reference computations).

#include <quadmath.h>

#include <cfloat>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <string_view>

namespace orthogen {

using Quad = __float128;

template <class T>
struct precision;

template <>
struct precision<double> {
  static constexpr double epsilon() { return DBL_EPSILON; }
  static constexpr double tiny() { return DBL_MIN; }
  static constexpr double huge() { return DBL_MAX; }
  static constexpr int digits10 = 17;
};

template <>
struct precision<Quad> {
  static Quad epsilon() { return ldexpq(1, -112); }
  static Quad tiny() { return ldexpq(1, -16382); }
  static Quad huge() { return ldexpq(2 - ldexpq(1, -112), 16383); }
  static constexpr int digits10 = 36;
};

/// Machine epsilon of the working precision. Every tolerance in the
/// library is expressed as a multiple of this value.
template <class T = double>
T working_eps() {
  return precision<T>::epsilon();
}

namespace num {

inline double sqrt(double x) { return std::sqrt(x); }
inline double abs(double x) { return std::fabs(x); }
inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double log1p(double x) { return std::log1p(x); }
inline double cos(double x) { return std::cos(x); }
inline double sin(double x) { return std::sin(x); }
inline double atan(double x) { return std::atan(x); }
inline double atan2(double y, double x) { return std::atan2(y, x); }
inline double pow(double x, double y) { return std::pow(x, y); }
inline double floor(double x) { return std::floor(x); }
inline double hypot(double x, double y) { return std::hypot(x, y); }
inline bool isfinite(double x) { return std::isfinite(x); }

inline Quad sqrt(Quad x) { return sqrtq(x); }
inline Quad abs(Quad x) { return fabsq(x); }
inline Quad exp(Quad x) { return expq(x); }
inline Quad log(Quad x) { return logq(x); }
inline Quad log1p(Quad x) { return log1pq(x); }
inline Quad cos(Quad x) { return cosq(x); }
inline Quad sin(Quad x) { return sinq(x); }
inline Quad atan(Quad x) { return atanq(x); }
inline Quad atan2(Quad y, Quad x) { return atan2q(y, x); }
inline Quad pow(Quad x, Quad y) { return powq(x, y); }
inline Quad floor(Quad x) { return floorq(x); }
inline Quad hypot(Quad x, Quad y) { return hypotq(x, y); }
inline bool isfinite(Quad x) { return finiteq(x) != 0; }

template <class T>
T abs(const std::complex<T>& z) {
  return hypot(z.real(), z.imag());
}

template <class T>
std::complex<T> sqrt(const std::complex<T>& z) {
  // principal branch
  const T r = num::abs(z);
  if (r == T(0)) return {T(0), T(0)};
  const T x = z.real();
  const T y = z.imag();
  if (x >= T(0)) {
    const T t = sqrt((r + x) / T(2));
    return {t, y / (T(2) * t)};
  }
  T t = sqrt((r - x) / T(2));
  if (y < T(0)) t = -t;
  return {y / (T(2) * t), t};
}

template <class T>
T pi();
template <>
inline double pi<double>() {
  return 3.14159265358979323846;
}
template <>
inline Quad pi<Quad>() {
  static const Quad v = 4 * atanq(1);
  return v;
}

}  // namespace num

/// Parses a decimal literal at full precision of T.
template <class T>
T parse_real(std::string_view text);
template <>
double parse_real<double>(std::string_view text);
template <>
Quad parse_real<Quad>(std::string_view text);

/// Formats with the given number of significant digits.
std::string format_real(double x, int digits = 17);
std::string format_real(Quad x, int digits = 36);

}  // namespace orthogen
