#pragma once

#include "orthogen/core.hpp"

namespace orthogen {

enum class ClassicalFamily {
  LegendreSym,
  LegendreShift,
  Chebyshev1,
  Chebyshev2,
  Chebyshev3,
  Chebyshev4,
  Jacobi,
  GeneralizedLaguerre,
  Hermite,
};

struct ClassicalKind {
  ClassicalFamily family = ClassicalFamily::LegendreSym;
  // Jacobi: weight (1-t)^a (1+t)^b; Laguerre: t^a e^{-t}
  double a = 0;
  double b = 0;

  static ClassicalKind legendre() { return {ClassicalFamily::LegendreSym}; }
  static ClassicalKind shifted_legendre() { return {ClassicalFamily::LegendreShift}; }
  static ClassicalKind chebyshev(int which);
  static ClassicalKind jacobi(double a, double b) { return {ClassicalFamily::Jacobi, a, b}; }
  static ClassicalKind laguerre(double a = 0) { return {ClassicalFamily::GeneralizedLaguerre, a}; }
  static ClassicalKind hermite() { return {ClassicalFamily::Hermite}; }
};

/// Parses names such as "legendre", "chebyshev1", "jacobi", "laguerre".
ClassicalFamily parse_family(const std::string& name);

/// Recurrence coefficients of the classical weights. Jacobi and Laguerre
/// parameters are passed as T so that extended runs keep full precision.
/// When beta_0 of the Jacobi weight overflows it is clamped to the largest
/// finite value: recorded in `warnings` if given, thrown otherwise.
template <class T>
BasicRecurrenceTable<T> classical_coeffs(ClassicalFamily family, int n, T a = 0,
                                         T b = 0, Warnings* warnings = nullptr);

inline RecurrenceTable classical_coeffs(const ClassicalKind& kind, int n,
                                        Warnings* warnings = nullptr) {
  return classical_coeffs<double>(kind.family, n, kind.a, kind.b, warnings);
}

template <class T>
T log_gamma(T x);

template <class T>
T gamma_fn(T x);

/// Number of Stirling terms used at precision T and the matching
/// threshold above which the asymptotic series is applied directly.
template <class T>
int stirling_terms();
template <class T>
T stirling_threshold();

/// Bernoulli number B_{2m}, m = 1..20.
template <class T>
T bernoulli_even(int m);

}  // namespace orthogen
