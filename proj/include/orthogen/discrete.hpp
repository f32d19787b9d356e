#pragma once

#include "orthogen/core.hpp"

namespace orthogen {

/// Recurrence coefficients of a discrete measure by the Stieltjes
/// procedure. Fast but unstable for n close to N; kept that way on purpose.
template <class T>
BasicRecurrenceTable<T> stieltjes(int n, const BasicDiscreteMeasure<T>& d);

/// Same output as stieltjes() by orthogonal reduction of the bordered
/// matrix [[1, sqrt(w)^T], [sqrt(w), diag(x)]] to tridiagonal form,
/// processing one node at a time with Givens rotations (RKPW updating).
template <class T>
BasicRecurrenceTable<T> lanczos_reduce(int n, const BasicDiscreteMeasure<T>& d);

/// Closed-form table of the N-point equally spaced, equally weighted
/// measure on [-1,1].
template <class T>
BasicRecurrenceTable<T> discrete_chebyshev_reference(int N);

/// The measure itself: x_k = -1 + 2k/(N-1), w_k = 2/N.
template <class T>
BasicDiscreteMeasure<T> discrete_chebyshev_measure(int N);

}  // namespace orthogen
