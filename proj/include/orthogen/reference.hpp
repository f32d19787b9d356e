#pragma once

// Extended-precision reference computations. Each one reaches its answer by
// a route independent of the binary64 routine it is used to check.

#include "orthogen/classical.hpp"
#include "orthogen/core.hpp"

namespace orthogen::reference {

/// Elliptic weight of the Fourier-coefficient moment builders, by the
/// Stieltjes procedure on an N-point Gauss-Chebyshev discretization.
BasicRecurrenceTable<Quad> elliptic_table(int n, Quad omsq, int N = 3000);

/// t^sigma ln(1/t) on (0,1) by the modified Chebyshev algorithm on modified
/// moments against shifted Legendre polynomials.
BasicRecurrenceTable<Quad> log_weight_table(int n, Quad sigma);

/// Induced Legendre polynomials (measure pi_m^2 dt on [-1,1]) by Lanczos
/// reduction of an exact Gauss-Legendre discretization.
BasicRecurrenceTable<Quad> induced_legendre_table(int n, int m);

/// Legendre measure divided by (t-x) [y == 0] or by (t-x)^2 + y^2,
/// by the moment route at extended precision.
BasicRecurrenceTable<Quad> legendre_division_table(int n, Quad x, Quad y = 0);

/// The same measure by Lanczos reduction of an N-point Gauss-Legendre
/// discretization (slowly convergent, used to cross-check the former).
BasicRecurrenceTable<Quad> legendre_division_table_discretized(int n, Quad x, Quad y,
                                                               int N);

/// Half-range Hermite weight on the composite split 0,3,6,9,inf.
BasicRecurrenceTable<Quad> half_range_hermite_table(int n);

/// Power moment int t^j dl for the fixtures of the exactness suite
/// (Legendre, Chebyshev1, Laguerre with a = 0, Hermite).
Quad power_moment(ClassicalFamily family, int j);

}  // namespace orthogen::reference
