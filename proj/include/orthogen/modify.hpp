#pragma once

#include <complex>
#include <optional>

#include "orthogen/core.hpp"

namespace orthogen {

/// The elementary modifications of a measure, numbered as the `iopt`
/// options of the classical chri routine:
///   1 (t-x) dl          2 ((t-x)^2+y^2) dl      3 (t^2+y^2) dl
///   4 dl/(t-x)          5 dl/((t-x)^2+y^2)      6 dl/(t^2+y^2)
///   7 (t-x)^2 dl by one shifted QR step
enum class Modification {
  MulLinear = 1,
  MulQuadratic = 2,
  MulSymQuadratic = 3,
  DivLinear = 4,
  DivQuadratic = 5,
  DivSymQuadratic = 6,
  MulLinearSquaredQR = 7,
};

template <class T>
struct BasicModificationKind {
  Modification op = Modification::MulLinear;
  T x = T(0);
  T y = T(0);
  // Re/Im of the Cauchy integral of dl at x+iy (division kinds). Computed
  // internally by backward recurrence when absent.
  std::optional<T> hr;
  std::optional<T> hi;
  // symmetric kinds require the caller to attest alpha_k = 0
  bool symmetric = false;
};
using ModificationKind = BasicModificationKind<double>;

/// n coefficients of the modified measure from n+1 input coefficients.
/// n defaults to t.size() - 1; a longer table is used only to compute
/// missing hr/hi values.
template <class T>
BasicRecurrenceTable<T> chri(const BasicModificationKind<T>& kind,
                             const BasicRecurrenceTable<T>& t, int n = -1);

/// rho_k(z) = integral of pi_k(t) dl(t)/(z-t), k = 0..n, as the minimal
/// solution of the recurrence, by backward recursion from index nu started
/// at nu0 and raised by 5 until two successive passes agree to eps.
template <class T>
BasicComplexSequence<T> knum(int n, int nu0, int numax, std::complex<T> z, T eps,
                             const BasicRecurrenceTable<T>& base);

/// K_k(z) = rho_k(z) / pi_k(z), k = 0..n.
template <class T>
BasicComplexSequence<T> kern(int n, int nu0, int numax, std::complex<T> z, T eps,
                             const BasicRecurrenceTable<T>& base);

template <class T>
struct GchriResult {
  BasicRecurrenceTable<T> table;
  int nu_used = 0;
};

/// Division by (t-x) or (t-x)^2+y^2 through modified moments (from knum)
/// and the modified Chebyshev algorithm with the base table as reference.
/// Only DivLinear and DivQuadratic are accepted.
template <class T>
GchriResult<T> gchri(const BasicModificationKind<T>& kind, int n, int nu0, int numax,
                     T eps, const BasicRecurrenceTable<T>& base);

enum class Nu0Family { Jacobi, GenLaguerre, Hermite, Generic };

/// Starting index for the backward recursion in knum.
template <class T>
int nu0_estimate(Nu0Family family, int n, std::complex<T> z, T eps, T laguerre_a = T(0));

}  // namespace orthogen
