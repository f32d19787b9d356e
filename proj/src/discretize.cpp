#include "orthogen/discretize.hpp"

#include <string>

#include "orthogen/classical.hpp"
#include "orthogen/discrete.hpp"
#include "orthogen/momentalg.hpp"

namespace orthogen {

int discretization_size(int n, int idelta, int s) {
  int N = (2 * n - 1) / idelta + 1;
  for (int j = 1; j <= s; ++j) N += (j == 1) ? 1 : (1 << (j / 5)) * n;
  return N;
}

template <class T>
BasicQuadratureRule<T> fejer_rule(int N) {
  if (N < 1) throw Error(ErrorKind::OutOfRange, "Fejer rule needs N >= 1", N);
  const T pi = num::pi<T>();
  BasicQuadratureRule<T> q;
  q.nodes.resize(N);
  q.weights.resize(N);
  q.exactness = N - 1;
  for (int j = 0; j < N; ++j) {
    // sine form keeps the node set exactly symmetric
    q.nodes[j] = num::sin(T(2 * j + 1 - N) * pi / T(2 * N));
    const T theta = T(2 * (N - j) - 1) * pi / T(2 * N);
    T s = T(0);
    for (int k = N / 2; k >= 1; --k)
      s += num::cos(T(2 * k) * theta) / T(4 * k * k - 1);
    q.weights[j] = T(2) / T(N) * (T(1) - T(2) * s);
  }
  return q;
}

namespace {

template <class T>
const BasicQuadratureRule<T>& cached_fejer(int N) {
  thread_local BasicQuadratureRule<T> cache;
  if (int(cache.size()) != N) cache = fejer_rule<T>(N);
  return cache;
}

}  // namespace

template <class T>
BasicDiscreteMeasure<T> gp_discretizer(int N, int i,
                                       const BasicMeasureSpec<T>& spec) {
  if (i < 0 || i >= int(spec.components.size()))
    throw Error(ErrorKind::OutOfRange, "component index out of range", i);
  const auto& c = spec.components[i];
  const auto& f = cached_fejer<T>(N);
  const bool finl = num::isfinite(c.left);
  const bool finr = num::isfinite(c.right);
  BasicDiscreteMeasure<T> d;
  d.nodes.resize(N);
  d.weights.resize(N);
  d.indefinite = spec.indefinite;
  for (int r = 0; r < N; ++r) {
    const T t = f.nodes[r];
    T x, dx;
    if (finl && finr) {
      const T h = (c.right - c.left) / T(2);
      x = h * t + (c.right + c.left) / T(2);
      dx = h;
    } else if (finl) {
      x = c.left + (T(1) + t) / (T(1) - t);
      dx = T(2) / ((T(1) - t) * (T(1) - t));
    } else if (finr) {
      x = c.right - (T(1) - t) / (T(1) + t);
      dx = T(2) / ((T(1) + t) * (T(1) + t));
    } else {
      const T u = T(1) - t * t;
      x = t / u;
      dx = (T(1) + t * t) / (u * u);
    }
    d.nodes[r] = x;
    d.weights[r] = f.weights[r] * c.weight(x, i) * dx;
  }
  return d;
}

template <class T>
BasicDiscreteMeasure<T> discretize_measure(int N, const BasicMeasureSpec<T>& spec,
                                           const UserRule<T>& rule,
                                           Warnings* warnings) {
  BasicDiscreteMeasure<T> all;
  all.indefinite = spec.indefinite;
  const int mc = int(spec.components.size());
  for (int i = 0; i < mc; ++i) {
    BasicDiscreteMeasure<T> part;
    if (rule) {
      int status = 0;
      part = rule(N, i, status);
      if (status != 0)
        throw Error(ErrorKind::InvalidOption,
                    "discretizer failed on component " + std::to_string(i), i);
      if (int(part.size()) != N || part.weights.size() != part.nodes.size())
        throw Error(ErrorKind::OutOfRange,
                    "discretizer returned the wrong number of points", i);
    } else {
      part = gp_discretizer(N, i, spec);
    }
    all.nodes.insert(all.nodes.end(), part.nodes.begin(), part.nodes.end());
    all.weights.insert(all.weights.end(), part.weights.begin(), part.weights.end());
  }
  for (const auto& m : spec.masses) {
    all.nodes.push_back(m.x);
    all.weights.push_back(m.y);
  }
  const T tiny = precision<T>::tiny();
  long flushed = 0;
  for (auto& w : all.weights)
    if (w != T(0) && num::abs(w) < tiny) {
      w = T(0);
      ++flushed;
    }
  if (flushed && warnings)
    warnings->push_back({ErrorKind::Underflow, flushed,
                         std::to_string(flushed) + " discretization weights below "
                         "the normal range set to zero at N=" + std::to_string(N)});
  return all;
}

namespace {

template <class T>
bool converged(const std::vector<T>& beta, const std::vector<T>& prev, T eps) {
  for (std::size_t k = 0; k < beta.size(); ++k)
    if (!(num::abs(beta[k] - prev[k]) <= eps * num::abs(beta[k]))) return false;
  return true;
}

template <class T, class Step>
DiscretizationResult<T> iterate(int n, const BasicMeasureSpec<T>& spec,
                                const BasicDiscretizationPolicy<T>& policy,
                                Step step) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1", -1);
  if (policy.idelta != 1 && policy.idelta != 2)
    throw Error(ErrorKind::InvalidOption, "idelta must be 1 or 2", policy.idelta);
  validate_spec(spec);
  if (spec.components.empty() && spec.masses.empty())
    throw Error(ErrorKind::InvalidOption, "empty measure");
  const T eps = policy.eps > T(0) ? policy.eps : precision<T>::epsilon();

  DiscretizationResult<T> out;
  std::vector<T> prev(n, T(0));
  for (int s = 0;; ++s) {
    const int N = discretization_size(n, policy.idelta, s);
    if (N > policy.ncapm)
      throw Error(ErrorKind::NonConvergence,
                  "no convergence up to N=" + std::to_string(policy.ncapm),
                  policy.ncapm);
    Warnings pass_warnings;
    const auto d = discretize_measure(N, spec, policy.rule, &pass_warnings);
    out.table = step(d);
    out.report.ncap = N;
    out.report.kount = s;
    if (s >= 1 && converged(out.table.beta, prev, eps)) {
      out.warnings = std::move(pass_warnings);
      return out;
    }
    prev = out.table.beta;
  }
}

}  // namespace

template <class T>
DiscretizationResult<T> mcdis(int n, const BasicMeasureSpec<T>& spec,
                              const BasicDiscretizationPolicy<T>& policy) {
  return iterate<T>(n, spec, policy, [&](const BasicDiscreteMeasure<T>& d) {
    if (int(d.size()) < n)
      throw Error(ErrorKind::OutOfRange, "discrete measure smaller than n", n);
    return policy.engine == Engine::Lanczos ? lanczos_reduce(n, d) : stieltjes(n, d);
  });
}

template <class T>
DiscretizationResult<T> mccheb(int n, const BasicMeasureSpec<T>& spec,
                               const BasicDiscretizationPolicy<T>& policy,
                               const BasicRecurrenceTable<T>& reference) {
  if (int(reference.size()) < 2 * n - 1)
    throw Error(ErrorKind::OutOfRange, "reference table needs 2n-1 entries",
                long(reference.size()));
  return iterate<T>(n, spec, policy, [&](const BasicDiscreteMeasure<T>& d) {
    BasicMomentVector<T> m;
    m.values.assign(2 * n, T(0));
    m.reference = reference;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d.weights[j] == T(0)) continue;
      const T x = d.nodes[j];
      T pm1 = T(0), p = T(1);
      for (int k = 0; k < 2 * n; ++k) {
        m.values[k] += d.weights[j] * p;
        if (k + 1 < 2 * n) {
          const T next = (x - reference.alpha[k]) * p - reference.beta[k] * pm1;
          pm1 = p;
          p = next;
        }
      }
    }
    return modified_chebyshev(n, m).table;
  });
}

template <class T>
BasicRecurrenceTable<T> jacobi_point_mass_reference(int n, T a, T b, T y) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1", n);
  if (!(a > T(-1)) || !(b > T(-1)) || !(y >= T(0)))
    throw Error(ErrorKind::InvalidOption,
                "requires alpha, beta > -1 and a nonnegative mass");
  const auto J = classical_coeffs<T>(ClassicalFamily::Jacobi, n, a, b);
  BasicRecurrenceTable<T> t;
  t.alpha.assign(n, T(0));
  t.beta.assign(n, T(0));
  t.alpha[0] = (J.alpha[0] - y) / (T(1) + y);
  t.beta[0] = T(1) + y;
  const T ab = a + b;
  T ckm1 = T(1) + y;
  T dk = T(1);
  for (int k = 1; k < n; ++k) {
    const T kk = T(k);
    if (k > 1) dk *= (b + kk) * (ab + kk) / ((a + kk - T(1)) * (kk - T(1)));
    const T ck = (T(1) + (b + kk + T(1)) * (ab + kk + T(1)) / (kk * (a + kk)) * y * dk) /
                 (T(1) + y * dk);
    t.alpha[k] = J.alpha[k] +
                 T(2) * kk * (a + kk) / ((ab + T(2) * kk) * (ab + T(2) * kk + T(1))) *
                     (ck - T(1)) +
                 T(2) * (b + kk + T(1)) * (ab + kk + T(1)) /
                     ((ab + T(2) * kk + T(1)) * (ab + T(2) * kk + T(2))) *
                     (T(1) / ck - T(1));
    t.beta[k] = ck / ckm1 * J.beta[k];
    ckm1 = ck;
  }
  return t;
}

#define ORTHOGEN_INSTANTIATE(T)                                                   \
  template BasicQuadratureRule<T> fejer_rule<T>(int);                             \
  template BasicDiscreteMeasure<T> gp_discretizer<T>(int, int,                    \
                                                     const BasicMeasureSpec<T>&); \
  template BasicDiscreteMeasure<T> discretize_measure<T>(                         \
      int, const BasicMeasureSpec<T>&, const UserRule<T>&, Warnings*);            \
  template DiscretizationResult<T> mcdis<T>(int, const BasicMeasureSpec<T>&,      \
                                            const BasicDiscretizationPolicy<T>&); \
  template DiscretizationResult<T> mccheb<T>(int, const BasicMeasureSpec<T>&,     \
                                             const BasicDiscretizationPolicy<T>&, \
                                             const BasicRecurrenceTable<T>&);     \
  template BasicRecurrenceTable<T> jacobi_point_mass_reference<T>(int, T, T, T);

ORTHOGEN_INSTANTIATE(double)
ORTHOGEN_INSTANTIATE(Quad)

}  // namespace orthogen
