#include "orthogen/reference.hpp"

#include "orthogen/discrete.hpp"
#include "orthogen/discretize.hpp"
#include "orthogen/modify.hpp"
#include "orthogen/momentalg.hpp"
#include "orthogen/quadrule.hpp"

namespace orthogen::reference {

using Q = Quad;

BasicRecurrenceTable<Q> elliptic_table(int n, Q omsq, int N) {
  const Q pi = num::pi<Q>();
  BasicDiscreteMeasure<Q> d;
  for (int r = 1; r <= N; ++r) {
    const Q x = num::cos(Q(2 * r - 1) * pi / Q(2 * N));
    d.nodes.push_back(x);
    d.weights.push_back(pi / Q(N) / num::sqrt(Q(1) - omsq * x * x));
  }
  return stieltjes(n, d);
}

BasicRecurrenceTable<Q> log_weight_table(int n, Q sigma) {
  const bool is_int = num::floor(sigma) == sigma && sigma >= Q(0);
  const auto m = log_weight_moments<Q>(n, sigma, is_int, true);
  return modified_chebyshev(n, m).table;
}

BasicRecurrenceTable<Q> induced_legendre_table(int n, int m) {
  const int N = n + m + 1;
  const auto leg = classical_coeffs<Q>(ClassicalFamily::LegendreSym, std::max(N, m + 1));
  const auto g = gauss_rule(N, leg);
  BasicDiscreteMeasure<Q> d;
  for (int k = 0; k < N; ++k) {
    const Q p = polynomial_eval(leg, m, g.nodes[k]);
    d.nodes.push_back(g.nodes[k]);
    d.weights.push_back(g.weights[k] * p * p);
  }
  return lanczos_reduce(n, d);
}

BasicRecurrenceTable<Q> legendre_division_table(int n, Q x, Q y) {
  const int numax = 4000;
  const auto base = classical_coeffs<Q>(ClassicalFamily::LegendreSym, numax);
  BasicModificationKind<Q> kind;
  kind.op = y == Q(0) ? Modification::DivLinear : Modification::DivQuadratic;
  kind.x = x;
  kind.y = y;
  const Q eps = Q(1e-31);
  const int nu0 = nu0_estimate<Q>(Nu0Family::Jacobi, 2 * n - 1, {x, y}, eps);
  return gchri(kind, n, std::max(nu0, 2 * n), numax, eps, base).table;
}

BasicRecurrenceTable<Q> legendre_division_table_discretized(int n, Q x, Q y, int N) {
  const auto leg = classical_coeffs<Q>(ClassicalFamily::LegendreSym, N);
  const auto g = gauss_rule(N, leg);
  BasicDiscreteMeasure<Q> d;
  for (int k = 0; k < N; ++k) {
    const Q t = g.nodes[k];
    const Q f = y == Q(0) ? Q(1) / (t - x) : Q(1) / ((t - x) * (t - x) + y * y);
    d.nodes.push_back(t);
    d.weights.push_back(g.weights[k] * f);
  }
  return lanczos_reduce(n, d);
}

BasicRecurrenceTable<Q> half_range_hermite_table(int n) {
  BasicMeasureSpec<Q> spec;
  auto w = [](Q t, int) { return num::exp(-t * t); };
  const Q ends[] = {Q(0), Q(3), Q(6), Q(9), infinity<Q>()};
  for (int i = 0; i < 4; ++i) spec.components.push_back({ends[i], ends[i + 1], w});
  BasicDiscretizationPolicy<Q> p;
  p.eps = Q(1e-30);
  p.ncapm = 2000;
  return mcdis(n, spec, p).table;
}

Q power_moment(ClassicalFamily family, int j) {
  const Q pi = num::pi<Q>();
  switch (family) {
    case ClassicalFamily::LegendreSym:
      return j % 2 ? Q(0) : Q(2) / Q(j + 1);
    case ClassicalFamily::Chebyshev1: {
      if (j % 2) return Q(0);
      // pi (2k)! / (4^k k!^2)
      Q v = pi;
      for (int i = 1; i <= j / 2; ++i) v *= Q(2 * i - 1) / Q(2 * i);
      return v;
    }
    case ClassicalFamily::GeneralizedLaguerre: {
      Q v = Q(1);
      for (int i = 2; i <= j; ++i) v *= Q(i);
      return v;
    }
    case ClassicalFamily::Hermite: {
      if (j % 2) return Q(0);
      // sqrt(pi) (2k-1)!! / 2^k
      Q v = num::sqrt(pi);
      for (int i = 1; i <= j / 2; ++i) v *= Q(2 * i - 1) / Q(2);
      return v;
    }
    default:
      throw Error(ErrorKind::InvalidOption, "no power moments for this family");
  }
}

}  // namespace orthogen::reference
