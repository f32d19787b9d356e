#include "orthogen/quadrule.hpp"

#include <algorithm>
#include <numeric>

namespace orthogen {

// Implicit QL with Wilkinson shift, accumulating only the first row of the
// eigenvector matrix.
template <class T>
void tridiagonal_eigen(std::vector<T> d, std::vector<T> e, T eps,
                       std::vector<T>& values, std::vector<T>& first_sq) {
  const int n = int(d.size());
  std::vector<T> v(n, T(0));
  if (n == 0) {
    values.clear();
    first_sq.clear();
    return;
  }
  v[0] = T(1);
  e.resize(n, T(0));
  e[n - 1] = T(0);
  const T tiny = precision<T>::tiny();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        const T em = num::abs(e[m]);
        if (em <= eps * (num::abs(d[m]) + num::abs(d[m + 1])) || em <= tiny)
          break;
      }
      T p = d[l];
      if (m == l) break;
      if (iter == 30)
        throw Error(ErrorKind::NonConvergence,
                    "eigenvalue " + std::to_string(l) + " not found in 30 iterations",
                    l);
      ++iter;
      T g = (d[l + 1] - p) / (T(2) * e[l]);
      T r = num::hypot(g, T(1));
      g = d[m] - p + e[l] / (g + (g >= T(0) ? r : -r));
      T s = T(1), c = T(1);
      p = T(0);
      for (int i = m - 1; i >= l; --i) {
        T f = s * e[i];
        const T b = c * e[i];
        if (num::abs(f) >= num::abs(g)) {
          c = g / f;
          r = num::hypot(c, T(1));
          e[i + 1] = f * r;
          s = T(1) / r;
          c *= s;
        } else {
          s = f / g;
          r = num::hypot(s, T(1));
          e[i + 1] = g * r;
          c = T(1) / r;
          s *= c;
        }
        g = d[i + 1] - p;
        r = (d[i] - g) * s + T(2) * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = v[i + 1];
        v[i + 1] = s * v[i] + c * f;
        v[i] = c * v[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = T(0);
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return d[i] < d[j]; });
  values.resize(n);
  first_sq.resize(n);
  for (int k = 0; k < n; ++k) {
    values[k] = d[order[k]];
    first_sq[k] = v[order[k]] * v[order[k]];
  }
}

namespace {

template <class T>
T resolve_eps(T eps) {
  return eps > T(0) ? eps : precision<T>::epsilon();
}

template <class T>
BasicQuadratureRule<T> rule_from_matrix(const std::vector<T>& diag,
                                        const std::vector<T>& beta, T eps,
                                        int exactness) {
  const int n = int(diag.size());
  if (n < 1) throw Error(ErrorKind::OutOfRange, "rule needs at least one node", -1);
  if (beta[0] < T(0))
    throw Error(ErrorKind::InvalidOption, "negative beta_0", -2);
  std::vector<T> e;
  for (int k = 1; k < n; ++k) {
    if (beta[k] < T(0))
      throw Error(ErrorKind::InvalidOption,
                  "negative beta_" + std::to_string(k), -2);
    e.push_back(num::sqrt(beta[k]));
  }
  BasicQuadratureRule<T> q;
  std::vector<T> vsq;
  tridiagonal_eigen(diag, e, eps, q.nodes, vsq);
  q.weights.resize(n);
  for (int k = 0; k < n; ++k) q.weights[k] = beta[0] * vsq[k];
  q.exactness = exactness;

  // a zero diagonal means a symmetric measure; make the rule exactly so
  if (std::all_of(diag.begin(), diag.end(), [](T v) { return v == T(0); })) {
    for (int k = 0; k < n / 2; ++k) {
      const int j = n - 1 - k;
      const T x = (q.nodes[j] - q.nodes[k]) / T(2);
      const T w = (q.weights[j] + q.weights[k]) / T(2);
      q.nodes[k] = -x;
      q.nodes[j] = x;
      q.weights[k] = q.weights[j] = w;
    }
    if (n % 2) q.nodes[n / 2] = T(0);
  }

  T scale = T(0);
  for (auto x : q.nodes) scale = std::max(scale, num::abs(x));
  for (int k = 1; k < n; ++k)
    if (q.nodes[k] - q.nodes[k - 1] <= T(4) * precision<T>::epsilon() * scale)
      throw Error(ErrorKind::SingularSystem, "coincident nodes", k);
  q.positive = std::all_of(q.weights.begin(), q.weights.end(),
                           [](T w) { return w > T(0); });
  return q;
}

}  // namespace

template <class T>
BasicQuadratureRule<T> gauss_rule(int n, const BasicRecurrenceTable<T>& t, T eps) {
  if (n < 1 || std::size_t(n) > t.size())
    throw Error(ErrorKind::OutOfRange, "gauss_rule: n outside 1..table size", -1);
  std::vector<T> d(t.alpha.begin(), t.alpha.begin() + n);
  std::vector<T> b(t.beta.begin(), t.beta.begin() + n);
  return rule_from_matrix(d, b, resolve_eps(eps), 2 * n - 1);
}

template <class T>
BasicQuadratureRule<T> radau_rule(int n, const BasicRecurrenceTable<T>& t, T x0,
                                  T eps) {
  if (n < 0 || std::size_t(n) + 1 > t.size())
    throw Error(ErrorKind::OutOfRange, "radau_rule needs n+1 coefficients", -1);
  T p0 = T(0), p1 = T(1);
  for (int k = 0; k < n; ++k) {
    const T pm1 = p0;
    p0 = p1;
    p1 = (x0 - t.alpha[k]) * p0 - t.beta[k] * pm1;
  }
  if (p1 == T(0))
    throw Error(ErrorKind::SingularSystem, "pi_n vanishes at the prescribed node");
  std::vector<T> d(t.alpha.begin(), t.alpha.begin() + n + 1);
  std::vector<T> b(t.beta.begin(), t.beta.begin() + n + 1);
  d[n] = x0 - t.beta[n] * p0 / p1;
  return rule_from_matrix(d, b, resolve_eps(eps), 2 * n);
}

template <class T>
BasicQuadratureRule<T> lobatto_rule(int n, const BasicRecurrenceTable<T>& t,
                                    T left, T right, T eps) {
  if (n < 0 || std::size_t(n) + 2 > t.size())
    throw Error(ErrorKind::OutOfRange, "lobatto_rule needs n+2 coefficients", -1);
  if (!(left < right))
    throw Error(ErrorKind::InvalidOption, "lobatto_rule requires left < right");
  T p0l = T(0), p0r = T(0), p1l = T(1), p1r = T(1);
  for (int k = 0; k <= n; ++k) {
    const T pm1l = p0l, pm1r = p0r;
    p0l = p1l;
    p0r = p1r;
    p1l = (left - t.alpha[k]) * p0l - t.beta[k] * pm1l;
    p1r = (right - t.alpha[k]) * p0r - t.beta[k] * pm1r;
  }
  const T det = p1l * p0r - p1r * p0l;
  if (det == T(0))
    throw Error(ErrorKind::SingularSystem, "Lobatto 2x2 system is singular");
  std::vector<T> d(t.alpha.begin(), t.alpha.begin() + n + 2);
  std::vector<T> b(t.beta.begin(), t.beta.begin() + n + 2);
  d[n + 1] = (left * p1l * p0r - right * p1r * p0l) / det;
  b[n + 1] = (right - left) * p1l * p1r / det;
  if (!(b[n + 1] > T(0)))
    throw Error(ErrorKind::InvalidOption, "bordered Lobatto beta is not positive",
                -2);
  return rule_from_matrix(d, b, resolve_eps(eps), 2 * n + 1);
}

template <class T>
T polynomial_eval(const BasicRecurrenceTable<T>& t, int k, T x) {
  if (k < 0 || std::size_t(k) > t.size())
    throw Error(ErrorKind::OutOfRange, "polynomial degree exceeds table", k);
  T pm1 = T(0), p = T(1);
  for (int j = 0; j < k; ++j) {
    const T next = (x - t.alpha[j]) * p - t.beta[j] * pm1;
    pm1 = p;
    p = next;
  }
  return p;
}

template <class T>
std::complex<T> polynomial_eval(const BasicRecurrenceTable<T>& t, int k,
                                std::complex<T> x) {
  if (k < 0 || std::size_t(k) > t.size())
    throw Error(ErrorKind::OutOfRange, "polynomial degree exceeds table", k);
  std::complex<T> pm1(0), p(1);
  for (int j = 0; j < k; ++j) {
    const std::complex<T> next = (x - t.alpha[j]) * p - t.beta[j] * pm1;
    pm1 = p;
    p = next;
  }
  return p;
}

#define ORTHOGEN_INSTANTIATE(T)                                                   \
  template void tridiagonal_eigen<T>(std::vector<T>, std::vector<T>, T,          \
                                     std::vector<T>&, std::vector<T>&);          \
  template BasicQuadratureRule<T> gauss_rule<T>(int, const BasicRecurrenceTable<T>&, \
                                                T);                               \
  template BasicQuadratureRule<T> radau_rule<T>(int, const BasicRecurrenceTable<T>&, \
                                                T, T);                            \
  template BasicQuadratureRule<T> lobatto_rule<T>(                               \
      int, const BasicRecurrenceTable<T>&, T, T, T);                              \
  template T polynomial_eval<T>(const BasicRecurrenceTable<T>&, int, T);          \
  template std::complex<T> polynomial_eval<T>(const BasicRecurrenceTable<T>&, int, \
                                              std::complex<T>);

ORTHOGEN_INSTANTIATE(double)
ORTHOGEN_INSTANTIATE(Quad)

}  // namespace orthogen
