#pragma once

#include <complex>

#include "orthogen/core.hpp"

namespace orthogen {

/// n-point Gauss rule from the first n recurrence coefficients. Nodes are
/// the eigenvalues of the Jacobi matrix, weights beta_0 times the squared
/// first components of the normalized eigenvectors. `eps <= 0` selects the
/// working precision.
template <class T>
BasicQuadratureRule<T> gauss_rule(int n, const BasicRecurrenceTable<T>& t,
                                  T eps = T(0));

/// (n+1)-point Gauss-Radau rule with prescribed node x0; needs n+1
/// coefficients.
template <class T>
BasicQuadratureRule<T> radau_rule(int n, const BasicRecurrenceTable<T>& t, T x0,
                                  T eps = T(0));

/// (n+2)-point Gauss-Lobatto rule with prescribed nodes left < right; needs
/// n+2 coefficients.
template <class T>
BasicQuadratureRule<T> lobatto_rule(int n, const BasicRecurrenceTable<T>& t,
                                    T left, T right, T eps = T(0));

/// Monic pi_k(x) by the forward recurrence; k may equal the table size.
template <class T>
T polynomial_eval(const BasicRecurrenceTable<T>& t, int k, T x);
template <class T>
std::complex<T> polynomial_eval(const BasicRecurrenceTable<T>& t, int k,
                                std::complex<T> x);

/// Eigenvalues (ascending) and squared first eigenvector components of the
/// symmetric tridiagonal matrix with diagonal d and off-diagonal e
/// (e.size() == d.size() - 1).
template <class T>
void tridiagonal_eigen(std::vector<T> d, std::vector<T> e, T eps,
                       std::vector<T>& values, std::vector<T>& first_sq);

}  // namespace orthogen
