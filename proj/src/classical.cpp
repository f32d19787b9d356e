#include "orthogen/classical.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace orthogen {

ClassicalKind ClassicalKind::chebyshev(int which) {
  switch (which) {
    case 1: return {ClassicalFamily::Chebyshev1};
    case 2: return {ClassicalFamily::Chebyshev2};
    case 3: return {ClassicalFamily::Chebyshev3};
    case 4: return {ClassicalFamily::Chebyshev4};
  }
  throw Error(ErrorKind::InvalidOption, "Chebyshev kind must be 1..4", which);
}

ClassicalFamily parse_family(const std::string& name) {
  static const std::pair<const char*, ClassicalFamily> names[] = {
      {"legendre", ClassicalFamily::LegendreSym},
      {"shifted-legendre", ClassicalFamily::LegendreShift},
      {"chebyshev1", ClassicalFamily::Chebyshev1},
      {"chebyshev2", ClassicalFamily::Chebyshev2},
      {"chebyshev3", ClassicalFamily::Chebyshev3},
      {"chebyshev4", ClassicalFamily::Chebyshev4},
      {"jacobi", ClassicalFamily::Jacobi},
      {"laguerre", ClassicalFamily::GeneralizedLaguerre},
      {"hermite", ClassicalFamily::Hermite},
  };
  for (const auto& [s, f] : names)
    if (name == s) return f;
  throw Error(ErrorKind::InvalidOption, "unknown polynomial family '" + name + "'");
}

namespace {

// B_{2m} = num/den for m = 1..20
constexpr std::array<std::pair<const char*, const char*>, 20> kBernoulli = {{
    {"1", "6"},
    {"-1", "30"},
    {"1", "42"},
    {"-1", "30"},
    {"5", "66"},
    {"-691", "2730"},
    {"7", "6"},
    {"-3617", "510"},
    {"43867", "798"},
    {"-174611", "330"},
    {"854513", "138"},
    {"-236364091", "2730"},
    {"8553103", "6"},
    {"-23749461029", "870"},
    {"8615841276005", "14322"},
    {"-7709321041217", "510"},
    {"2577687858367", "6"},
    {"-26315271553053477373", "1919190"},
    {"2929993913841559", "6"},
    {"-261082718496449122051", "13530"},
}};

constexpr const char* kEulerGamma =
    "0.57721566490153286060651209008240243104215933593992";
constexpr const char* kHalfLog2Pi =
    "0.91893853320467274178032973640561763986139747363778";

template <class T>
struct StirlingSetup {
  int terms;
  T threshold;
  std::vector<T> coef;  // B_{2m} / (2m(2m-1))
};

// Truncating after `n` terms leaves an error below the first omitted term,
// |B_{2n+2}| / ((2n+2)(2n+1) y^{2n+1}). Requiring that to be at most eps/2
// yields the threshold y0(n); the cost of an evaluation below the threshold
// grows like y0 (shift steps) + n (series terms), which is what we minimize.
template <class T>
StirlingSetup<T> make_stirling() {
  const T eps = precision<T>::epsilon();
  StirlingSetup<T> s{0, T(0), {}};
  T best = precision<T>::huge();
  for (int n = 1; n < int(kBernoulli.size()); ++n) {
    const auto& [bn, bd] = kBernoulli[n];
    const T next = num::abs(parse_real<T>(bn) / parse_real<T>(bd)) /
                   T((2 * n + 2) * (2 * n + 1));
    const T y0 = num::exp(num::log(T(2) * next / eps) / T(2 * n + 1));
    const T cost = y0 + T(n);
    if (cost < best) {
      best = cost;
      s.terms = n;
      s.threshold = y0;
    }
  }
  for (int m = 1; m <= s.terms; ++m)
    s.coef.push_back(bernoulli_even<T>(m) / T((2 * m) * (2 * m - 1)));
  return s;
}

template <class T>
const StirlingSetup<T>& stirling() {
  static const StirlingSetup<T> s = make_stirling<T>();
  return s;
}

// zeta(k) - 1 for k = 2..kmax by Euler-Maclaurin summation
template <class T>
std::vector<T> make_zeta_minus_one(int kmax) {
  constexpr int N = 30;
  constexpr int J = 18;
  std::vector<T> z(kmax + 1, T(0));
  for (int k = 2; k <= kmax; ++k) {
    const T s = T(k);
    T sum = T(0);
    for (int j = N - 1; j >= 2; --j) sum += num::pow(T(j), -s);
    const T NN = T(N);
    sum += num::pow(NN, T(1) - s) / (s - T(1)) + num::pow(NN, -s) / T(2);
    // sum_i B_{2i}/(2i)! * s(s+1)...(s+2i-2) * N^{-s-2i+1}
    T rising = s;  // s(s+1)...(s+2i-2)
    T fact = T(2);  // (2i)!
    T npow = num::pow(NN, -s - T(1));
    for (int i = 1; i <= J; ++i) {
      sum += bernoulli_even<T>(i) / fact * rising * npow;
      rising *= (s + T(2 * i - 1)) * (s + T(2 * i));
      fact *= T((2 * i + 1) * (2 * i + 2));
      npow /= NN * NN;
    }
    z[k] = sum;
  }
  return z;
}

template <class T>
int taylor_terms() {
  // (1/2)^k / k below eps for |t| <= 1/2 with zeta(k)-1 ~ 2^{-k}
  return precision<T>::digits10 > 20 ? 64 : 30;
}

template <class T>
const std::vector<T>& zeta_minus_one() {
  static const std::vector<T> z = make_zeta_minus_one<T>(taylor_terms<T>() + 1);
  return z;
}

// ln Gamma(1+t) for |t| <= 1/2:
//   -ln(1+t) + (1-gamma) t + sum_k (-1)^k (zeta(k)-1) t^k / k
template <class T>
T log_gamma_1p(T t) {
  const auto& z = zeta_minus_one<T>();
  const int K = taylor_terms<T>();
  T sum = T(0);
  for (int k = K; k >= 2; --k) {
    const T c = ((k % 2) ? -z[k] : z[k]) / T(k);
    sum = (sum + c) * t;
  }
  sum *= t;
  static const T gamma = parse_real<T>(kEulerGamma);
  return -num::log1p(t) + (T(1) - gamma) * t + sum;
}

template <class T>
T stirling_sum(T x) {
  const auto& s = stirling<T>();
  static const T half_log_2pi = parse_real<T>(kHalfLog2Pi);
  const T r = T(1) / x;
  const T r2 = r * r;
  T series = T(0);
  for (int m = s.terms; m >= 1; --m) series = series * r2 + s.coef[m - 1];
  series *= r;
  return (x - T(0.5)) * num::log(x) - x + half_log_2pi + series;
}

}  // namespace

template <class T>
T bernoulli_even(int m) {
  if (m < 1 || m > int(kBernoulli.size()))
    throw Error(ErrorKind::OutOfRange, "Bernoulli index out of range", m);
  return parse_real<T>(kBernoulli[m - 1].first) /
         parse_real<T>(kBernoulli[m - 1].second);
}

template <class T>
int stirling_terms() {
  return stirling<T>().terms;
}

template <class T>
T stirling_threshold() {
  return stirling<T>().threshold;
}

template <class T>
T log_gamma(T x) {
  if (!(x > T(0)))
    throw Error(ErrorKind::InvalidOption, "log_gamma requires x > 0");
  if (!num::isfinite(x)) return x;
  // Near the zeros of ln Gamma at 1 and 2 the shifted Stirling formula
  // suffers cancellation; a Taylor expansion about 1 keeps relative accuracy.
  if (x < T(0.5)) return log_gamma_1p(x) - num::log(x);
  if (x <= T(1.5)) return log_gamma_1p(x - T(1));
  if (x <= T(2.5)) return num::log1p(x - T(2)) + log_gamma_1p(x - T(2));
  if (x <= T(3.5))
    return num::log((x - T(1)) * (x - T(2))) + log_gamma_1p(x - T(3));

  const T y0 = stirling<T>().threshold;
  if (x >= y0) return stirling_sum(x);
  // ln Gamma(x) = ln Gamma(x+k0) - ln(x(x+1)...(x+k0-1))
  T y = x;
  T p = T(1);
  T logp = T(0);
  const T guard = num::sqrt(precision<T>::huge());
  while (y < y0) {
    p *= y;
    if (p > guard) {
      logp += num::log(p);
      p = T(1);
    }
    y += T(1);
  }
  return stirling_sum(y) - (logp + num::log(p));
}

template <class T>
T gamma_fn(T x) {
  const T lg = log_gamma(x);
  if (lg > num::log(precision<T>::huge()))
    throw Error(ErrorKind::Overflow, "gamma function overflows");
  return num::exp(lg);
}

template <class T>
BasicRecurrenceTable<T> classical_coeffs(ClassicalFamily family, int n, T a,
                                         T b, Warnings* warnings) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1", n);
  BasicRecurrenceTable<T> t;
  t.alpha.assign(n, T(0));
  t.beta.assign(n, T(0));
  const T pi = num::pi<T>();
  auto& al = t.alpha;
  auto& be = t.beta;

  switch (family) {
    case ClassicalFamily::LegendreSym:
    case ClassicalFamily::LegendreShift: {
      const bool shifted = family == ClassicalFamily::LegendreShift;
      be[0] = shifted ? T(1) : T(2);
      for (int k = 1; k < n; ++k) {
        const T kk = T(k);
        be[k] = T(1) / (T(4) - T(1) / (kk * kk));
        if (shifted) be[k] /= T(4);
      }
      if (shifted) std::fill(al.begin(), al.end(), T(0.5));
      break;
    }
    case ClassicalFamily::Chebyshev1:
      be[0] = pi;
      if (n > 1) be[1] = T(0.5);
      for (int k = 2; k < n; ++k) be[k] = T(0.25);
      break;
    case ClassicalFamily::Chebyshev2:
      be[0] = pi / T(2);
      for (int k = 1; k < n; ++k) be[k] = T(0.25);
      break;
    case ClassicalFamily::Chebyshev3:
    case ClassicalFamily::Chebyshev4:
      al[0] = family == ClassicalFamily::Chebyshev3 ? T(0.5) : T(-0.5);
      be[0] = pi;
      for (int k = 1; k < n; ++k) be[k] = T(0.25);
      break;
    case ClassicalFamily::Jacobi: {
      if (!(a > T(-1)) || !(b > T(-1)))
        throw Error(ErrorKind::InvalidOption, "Jacobi parameters must exceed -1");
      const T ab = a + b;
      al[0] = (b - a) / (ab + T(2));
      const T lb0 = (ab + T(1)) * num::log(T(2)) + log_gamma(a + T(1)) +
                    log_gamma(b + T(1)) - log_gamma(ab + T(2));
      if (lb0 > num::log(precision<T>::huge())) {
        if (!warnings) throw Error(ErrorKind::Overflow, "Jacobi beta_0 overflows", 0);
        warnings->push_back({ErrorKind::Overflow, 0,
                             "Jacobi beta_0 overflows; clamped to max finite"});
        be[0] = precision<T>::huge();
      } else {
        be[0] = num::exp(lb0);
      }
      if (n > 1) {
        const T s = ab + T(2);
        be[1] = T(4) * (a + T(1)) * (b + T(1)) / (s * s * (s + T(1)));
      }
      const T a2b2 = b * b - a * a;
      for (int k = 1; k < n; ++k) {
        const T t2 = T(2 * k) + ab;
        al[k] = a2b2 / (t2 * (t2 + T(2)));
        if (k >= 2) {
          const T kk = T(k);
          be[k] = T(4) * kk * (kk + a) * (kk + b) * (kk + ab) /
                  (t2 * t2 * (t2 + T(1)) * (t2 - T(1)));
        }
      }
      break;
    }
    case ClassicalFamily::GeneralizedLaguerre: {
      if (!(a > T(-1)))
        throw Error(ErrorKind::InvalidOption, "Laguerre parameter must exceed -1");
      const T lg = log_gamma(a + T(1));
      if (lg > num::log(precision<T>::huge())) {
        if (!warnings) throw Error(ErrorKind::Overflow, "Laguerre beta_0 overflows", 0);
        warnings->push_back({ErrorKind::Overflow, 0,
                             "Laguerre beta_0 overflows; clamped to max finite"});
        be[0] = precision<T>::huge();
      } else {
        be[0] = num::exp(lg);
      }
      for (int k = 0; k < n; ++k) {
        const T kk = T(k);
        al[k] = T(2 * k + 1) + a;
        if (k > 0) be[k] = kk * (kk + a);
      }
      break;
    }
    case ClassicalFamily::Hermite:
      be[0] = num::sqrt(pi);
      for (int k = 1; k < n; ++k) be[k] = T(k) / T(2);
      break;
  }
  return t;
}

#define ORTHOGEN_INSTANTIATE(T)                                               \
  template T bernoulli_even<T>(int);                                          \
  template int stirling_terms<T>();                                           \
  template T stirling_threshold<T>();                                         \
  template T log_gamma<T>(T);                                                 \
  template T gamma_fn<T>(T);                                                  \
  template BasicRecurrenceTable<T> classical_coeffs<T>(ClassicalFamily, int, \
                                                       T, T, Warnings*);

ORTHOGEN_INSTANTIATE(double)
ORTHOGEN_INSTANTIATE(Quad)

}  // namespace orthogen
