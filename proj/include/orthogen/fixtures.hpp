#pragma once

// Ready-made measures with known or tabulated recurrence coefficients. They
// back the reproduction drivers of the CLI and the acceptance checks.

#include "orthogen/core.hpp"
#include "orthogen/discretize.hpp"

namespace orthogen::fixtures {

/// (1-t^2)^(-1/2) + c on (-1,1): two components over the same interval,
/// discretized by Gauss-Chebyshev and c times Gauss-Legendre, idelta = 2.
DiscretizationResult<double> chebyshev_plus_constant(int n, double c, double eps,
                                                     Engine engine = Engine::Stieltjes,
                                                     int ncapm = 81);

/// Normalized Jacobi weight plus a mass y at t = -1, discretized by
/// Gauss-Jacobi rules.
DiscretizationResult<double> jacobi_with_endpoint_mass(int n, double a, double b,
                                                       double y, double eps,
                                                       Engine engine = Engine::Stieltjes);

/// Logistic density exp(-t)/(1+exp(-t))^2 on the real line, folded onto
/// two Gauss-Laguerre discretizations of (0,inf) at -x and +x.
DiscretizationResult<double> logistic(int n, double eps, Engine engine = Engine::Stieltjes,
                                      int ncapm = 500, int idelta = 1);

/// exp(-t^2) on (0,inf) split at 3, 6, 9, general-purpose discretizer.
DiscretizationResult<double> half_range_hermite(int n, double eps,
                                                Engine engine = Engine::Stieltjes,
                                                int ncapm = 500, int idelta = 1);

/// (1-om2 t^2)^(-1/2) (1-t^2)^(-1/2) by the discretized modified Chebyshev
/// algorithm with Chebyshev points and monic Chebyshev reference.
DiscretizationResult<double> elliptic_by_mccheb(int n, double omsq, double eps,
                                                int ncapm = 1000);

/// Induced Legendre polynomials: pi_m^2 dt on [-1,1] from m squared-factor
/// modifications at the zeros of pi_m.
RecurrenceTable induced_legendre(int n, int m);

/// Zeros of the degree-m Legendre polynomial.
std::vector<double> legendre_zeros(int m);

}  // namespace orthogen::fixtures
