#include "orthogen/discrete.hpp"

#include <string>

namespace orthogen {

template <class T>
BasicRecurrenceTable<T> stieltjes(int n, const BasicDiscreteMeasure<T>& d) {
  validate_measure(d);
  const int N = int(d.size());
  if (n < 1 || n > N)
    throw Error(ErrorKind::OutOfRange, "stieltjes: n outside 1..N", 1);
  const auto& x = d.nodes;
  const auto& w = d.weights;
  BasicRecurrenceTable<T> t;
  t.alpha.assign(n, T(0));
  t.beta.assign(n, T(0));
  t.indefinite = d.indefinite;

  T sum0 = T(0), sum1 = T(0);
  for (int m = 0; m < N; ++m) {
    sum0 += w[m];
    sum1 += w[m] * x[m];
  }
  if (sum0 == T(0)) throw Error(ErrorKind::Underflow, "measure has zero mass", 0);
  t.alpha[0] = sum1 / sum0;
  t.beta[0] = sum0;
  const T mass = num::abs(sum0);
  const T lo = precision<T>::tiny() * mass;
  const T hi = precision<T>::huge() / (mass > T(1) ? mass : T(1));

  std::vector<T> p1(N, T(0)), p2(N, T(1));
  for (int k = 0; k + 1 < n; ++k) {
    sum1 = T(0);
    T sum2 = T(0);
    for (int m = 0; m < N; ++m) {
      if (w[m] == T(0)) continue;
      const T p0 = p1[m];
      p1[m] = p2[m];
      p2[m] = (x[m] - t.alpha[k]) * p1[m] - t.beta[k] * p0;
      const T term = w[m] * p2[m] * p2[m];
      sum1 += term;
      sum2 += term * x[m];
      if (num::abs(p2[m]) > hi || num::abs(sum1) > hi || num::abs(sum2) > hi ||
          !num::isfinite(term))
        throw Error(ErrorKind::Overflow,
                    "pi_" + std::to_string(k + 1) + " overflows", k + 1);
    }
    if (num::abs(sum1) < lo)
      throw Error(ErrorKind::Underflow,
                  "norm of pi_" + std::to_string(k + 1) + " underflows", k + 1);
    t.alpha[k + 1] = sum2 / sum1;
    t.beta[k + 1] = sum1 / sum0;
    sum0 = sum1;
  }
  return t;
}

template <class T>
BasicRecurrenceTable<T> lanczos_reduce(int n, const BasicDiscreteMeasure<T>& d) {
  validate_measure(d);
  const int N = int(d.size());
  if (n < 1 || n > N)
    throw Error(ErrorKind::OutOfRange, "lanczos_reduce: n outside 1..N", 1);
  // p0 holds the current diagonal, p1 the current squared off-diagonal of
  // the tridiagonal form; node i+1 is folded in with one sweep of rotations.
  std::vector<T> p0(d.nodes), p1(N, T(0));
  p1[0] = d.weights[0];
  for (int i = 0; i + 1 < N; ++i) {
    T pi = d.weights[i + 1];
    T gam = T(1), sig = T(0), t = T(0);
    const T xlam = d.nodes[i + 1];
    for (int k = 0; k <= i + 1; ++k) {
      const T rho = p1[k] + pi;
      const T tmp = gam * rho;
      T tsig = sig;
      if (rho <= T(0)) {
        gam = T(1);
        sig = T(0);
      } else {
        gam = p1[k] / rho;
        sig = pi / rho;
      }
      const T tk = sig * (p0[k] - xlam) - gam * t;
      p0[k] -= tk - t;
      t = tk;
      if (sig <= T(0))
        pi = tsig * p1[k];
      else
        pi = t * t / sig;
      p1[k] = tmp;
    }
  }
  BasicRecurrenceTable<T> t;
  t.alpha.assign(p0.begin(), p0.begin() + n);
  t.beta.assign(p1.begin(), p1.begin() + n);
  t.indefinite = d.indefinite;
  return t;
}

template <class T>
BasicRecurrenceTable<T> discrete_chebyshev_reference(int N) {
  if (N < 2) throw Error(ErrorKind::OutOfRange, "N must be at least 2", N);
  BasicRecurrenceTable<T> t;
  t.alpha.assign(N, T(0));
  t.beta.assign(N, T(0));
  t.beta[0] = T(2);
  const T f = T(1) + T(1) / T(N - 1);
  for (int k = 1; k < N; ++k) {
    const T kk = T(k);
    const T q = kk / T(N);
    t.beta[k] = f * f * (T(1) - q * q) / (T(4) - T(1) / (kk * kk));
  }
  return t;
}

template <class T>
BasicDiscreteMeasure<T> discrete_chebyshev_measure(int N) {
  if (N < 2) throw Error(ErrorKind::OutOfRange, "N must be at least 2", N);
  BasicDiscreteMeasure<T> d;
  for (int k = 0; k < N; ++k) {
    d.nodes.push_back(T(-1) + T(2 * k) / T(N - 1));
    d.weights.push_back(T(2) / T(N));
  }
  return d;
}

#define ORTHOGEN_INSTANTIATE(T)                                                 \
  template BasicRecurrenceTable<T> stieltjes<T>(int, const BasicDiscreteMeasure<T>&); \
  template BasicRecurrenceTable<T> lanczos_reduce<T>(int,                       \
                                                     const BasicDiscreteMeasure<T>&); \
  template BasicRecurrenceTable<T> discrete_chebyshev_reference<T>(int);        \
  template BasicDiscreteMeasure<T> discrete_chebyshev_measure<T>(int);

ORTHOGEN_INSTANTIATE(double)
ORTHOGEN_INSTANTIATE(Quad)

}  // namespace orthogen
