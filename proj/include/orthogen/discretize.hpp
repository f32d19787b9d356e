#pragma once

#include <functional>

#include "orthogen/core.hpp"

namespace orthogen {

enum class Engine { Stieltjes, Lanczos };

/// Caller-supplied discretizer: returns an N-point node/weight set for
/// component i (0-based), the weight function already folded into the
/// weights. A nonzero `status` reports failure of that component.
template <class T>
using UserRule =
    std::function<BasicDiscreteMeasure<T>(int N, int i, int& status)>;

template <class T>
struct BasicDiscretizationPolicy {
  T eps = T(0);  // <= 0 selects the working precision
  int ncapm = 500;
  int idelta = 1;
  Engine engine = Engine::Stieltjes;
  UserRule<T> rule;  // empty selects the general-purpose Fejer path
};
using DiscretizationPolicy = BasicDiscretizationPolicy<double>;

struct DiscretizationReport {
  int ncap = 0;
  int kount = 0;
};

template <class T>
struct DiscretizationResult {
  BasicRecurrenceTable<T> table;
  DiscretizationReport report;
  Warnings warnings;
};

/// Multiple-component discretization: iterates the discretization size
/// until successive beta's agree to eps.
template <class T>
DiscretizationResult<T> mcdis(int n, const BasicMeasureSpec<T>& spec,
                              const BasicDiscretizationPolicy<T>& policy);

/// Discretized modified Chebyshev algorithm with the same schedule and
/// stopping rule as mcdis().
template <class T>
DiscretizationResult<T> mccheb(int n, const BasicMeasureSpec<T>& spec,
                               const BasicDiscretizationPolicy<T>& policy,
                               const BasicRecurrenceTable<T>& reference);

/// The discretization sizes tried by mcdis: N_0^{[s]} for s = 0, 1, ...
int discretization_size(int n, int idelta, int s);

/// N-point Fejer rule on [-1,1], nodes ascending.
template <class T>
BasicQuadratureRule<T> fejer_rule(int N);

/// Fejer rule transplanted to component i of the spec, weight included.
template <class T>
BasicDiscreteMeasure<T> gp_discretizer(int N, int i, const BasicMeasureSpec<T>& spec);

/// The measure of all components and point masses at size N, as handed to
/// the inner engine.
template <class T>
BasicDiscreteMeasure<T> discretize_measure(int N, const BasicMeasureSpec<T>& spec,
                                           const UserRule<T>& rule,
                                           Warnings* warnings = nullptr);

/// Normalized Jacobi weight plus a mass y at t = -1: closed-form table.
template <class T>
BasicRecurrenceTable<T> jacobi_point_mass_reference(int n, T a, T b, T y);

}  // namespace orthogen
