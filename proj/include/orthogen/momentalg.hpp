#pragma once

#include <optional>

#include "orthogen/core.hpp"

namespace orthogen {

/// Moments nu_0..nu_{2n-1}. With a reference table (a_k, b_k) of length
/// 2n-1 the values are modified moments against the monic polynomials it
/// defines; without one they are ordinary power moments.
template <class T>
struct BasicMomentVector {
  std::vector<T> values;
  std::optional<BasicRecurrenceTable<T>> reference;
};
using MomentVector = BasicMomentVector<double>;

template <class T>
struct ChebyshevResult {
  BasicRecurrenceTable<T> table;
  std::vector<T> normsq;  // normsq[k] = integral of pi_k^2
};

/// Modified Chebyshev algorithm. `scale` multiplies the moments before the
/// recursion (to keep the sigma table inside the exponent range) and is
/// divided out of beta_0 and normsq afterwards.
template <class T>
ChebyshevResult<T> modified_chebyshev(int n, const BasicMomentVector<T>& m,
                                      T scale = T(1));

/// Moments of (1-t^2)^{-1/2}(1-w^2 t^2)^{-1/2} on (-1,1): modified ones are
/// taken against the monic Chebyshev polynomials of the first kind.
template <class T>
BasicMomentVector<T> elliptic_modified_moments(int n, T omsq, T eps = T(0));
template <class T>
BasicMomentVector<T> elliptic_ordinary_moments(int n, T omsq, T eps = T(0));

/// Fourier cosine coefficients C_0..C_{count-1} of (1 - w^2 sin^2 t)^{-1/2}
/// normalized as in C_0 + 2 sum C_r cos(2rt); computed from the minimal
/// solution of their three-term recurrence.
template <class T>
std::vector<T> elliptic_fourier(int count, T omsq, T eps = T(0));

/// Moments of t^sigma ln(1/t) on (0,1). Modified moments are taken against
/// the monic shifted Legendre polynomials.
template <class T>
BasicMomentVector<T> log_weight_moments(int n, T sigma, bool integer_sigma,
                                        bool modified);

}  // namespace orthogen
