#include "orthogen/momentalg.hpp"

#include <algorithm>
#include <string>

namespace orthogen {

template <class T>
ChebyshevResult<T> modified_chebyshev(int n, const BasicMomentVector<T>& m,
                                      T scale) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1", n);
  const int nn = 2 * n;
  if (int(m.values.size()) < nn)
    throw Error(ErrorKind::OutOfRange, "need 2n moments", long(m.values.size()));
  std::vector<T> a(nn, T(0)), b(nn, T(0));
  if (m.reference) {
    const auto& ref = *m.reference;
    if (int(ref.size()) < nn - 1)
      throw Error(ErrorKind::OutOfRange, "reference table needs 2n-1 entries",
                  long(ref.size()));
    std::copy(ref.alpha.begin(), ref.alpha.begin() + (nn - 1), a.begin());
    std::copy(ref.beta.begin(), ref.beta.begin() + (nn - 1), b.begin());
  }
  const T tiny = precision<T>::tiny();
  const T huge = precision<T>::huge();
  if (num::abs(m.values[0]) < tiny)
    throw Error(ErrorKind::InvalidOption, "nu_0 vanishes", 0);

  ChebyshevResult<T> out;
  auto& al = out.table.alpha;
  auto& be = out.table.beta;
  al.assign(n, T(0));
  be.assign(n, T(0));
  out.normsq.assign(n, T(0));

  std::vector<T> sigm1(nn, T(0)), sig0(nn), sig1(nn, T(0));
  for (int l = 0; l < nn; ++l) sig0[l] = m.values[l] * scale;
  al[0] = a[0] + m.values[1] / m.values[0];
  be[0] = m.values[0];
  out.normsq[0] = m.values[0];
  if (!(m.values[0] > T(0))) out.table.indefinite = true;

  for (int k = 1; k < n; ++k) {
    const int lk = nn - k - 1;
    for (int l = k; l <= lk; ++l) {
      sig1[l] = sig0[l + 1] - (al[k - 1] - a[l]) * sig0[l] -
                be[k - 1] * sigm1[l] + b[l] * sig0[l - 1];
    }
    const T skk = sig1[k];
    if (num::abs(skk) < T(10) * tiny)
      throw Error(ErrorKind::Underflow, "norm of pi_" + std::to_string(k) + " underflows", k);
    if (num::abs(skk) > huge / T(10) || !num::isfinite(skk))
      throw Error(ErrorKind::Overflow, "norm of pi_" + std::to_string(k) + " overflows", k);
    al[k] = a[k] + sig1[k + 1] / skk - sig0[k] / sig0[k - 1];
    be[k] = skk / sig0[k - 1];
    out.normsq[k] = skk / scale;
    if (!(be[k] > T(0))) out.table.indefinite = true;
    for (int l = k; l <= lk; ++l) {
      sigm1[l] = sig0[l];
      sig0[l] = sig1[l];
    }
  }
  return out;
}

template <class T>
std::vector<T> elliptic_fourier(int count, T omsq, T eps) {
  if (count < 1) throw Error(ErrorKind::OutOfRange, "count must be at least 1", count);
  if (!(omsq >= T(0)) || !(omsq < T(1)))
    throw Error(ErrorKind::InvalidOption, "om2 must lie in [0,1)");
  if (!(eps > T(0))) eps = precision<T>::epsilon();
  std::vector<T> c(count, T(0));
  if (omsq == T(0)) {
    c[0] = T(1);
    return c;
  }
  const T z = (T(2) - omsq) / omsq;
  const T target = T(1) / num::sqrt(T(1) - omsq);
  // Miller's algorithm: ratios rho_r = C_r / C_{r-1} from a zero start at
  // index nu, normalized by C_0 + 2 sum (-1)^r C_r = (1-w^2)^{-1/2}. The
  // start index doubles until the requested coefficients settle.
  auto pass = [&](int nu) {
    std::vector<T> rho(nu + 2, T(0));
    for (int r = nu; r >= 1; --r) {
      const T rr = T(r);
      rho[r] = -(rr - T(0.5)) / (T(2) * z * rr + (rr + T(0.5)) * rho[r + 1]);
    }
    // unnormalized C_r with C_0 = 1
    T sum = T(1), prod = T(1);
    std::vector<T> u(std::max(count, 1), T(0));
    u[0] = T(1);
    for (int r = 1; r <= nu; ++r) {
      prod *= rho[r];
      if (r < count) u[r] = prod;
      sum += T(2) * ((r % 2) ? -prod : prod);
    }
    const T c0 = target / sum;
    for (auto& v : u) v *= c0;
    return u;
  };
  int nu = std::max(2 * count, 32);
  std::vector<T> prev = pass(nu);
  constexpr int kCap = 1 << 20;
  for (;;) {
    nu *= 2;
    if (nu > kCap)
      throw Error(ErrorKind::NonConvergence,
                  "Fourier coefficients did not converge", kCap);
    std::vector<T> cur = pass(nu);
    bool ok = true;
    for (int r = 0; r < count && ok; ++r)
      if (num::abs(cur[r] - prev[r]) > eps * num::abs(cur[r])) ok = false;
    prev = std::move(cur);
    if (ok) break;
  }
  return prev;
}

template <class T>
BasicMomentVector<T> elliptic_modified_moments(int n, T omsq, T eps) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1", n);
  const std::vector<T> c = elliptic_fourier(n, omsq, eps);
  const T pi = num::pi<T>();
  BasicMomentVector<T> m;
  m.values.assign(2 * n, T(0));
  m.values[0] = pi * c[0];
  T p = T(2);  // 2^{1-2m} built by division
  for (int k = 1; k < n; ++k) {
    p /= T(4);
    m.values[2 * k] = ((k % 2) ? -pi : pi) * p * c[k];
  }
  // reference: monic Chebyshev polynomials of the first kind
  BasicRecurrenceTable<T> ref;
  ref.alpha.assign(2 * n - 1, T(0));
  ref.beta.assign(2 * n - 1, T(0.25));
  ref.beta[0] = pi;
  if (2 * n - 1 > 1) ref.beta[1] = T(0.5);
  m.reference = ref;
  return m;
}

template <class T>
BasicMomentVector<T> elliptic_ordinary_moments(int n, T omsq, T eps) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1", n);
  const std::vector<T> c = elliptic_fourier(n, omsq, eps);
  const T pi = num::pi<T>();
  BasicMomentVector<T> mv;
  mv.values.assign(2 * n, T(0));
  mv.values[0] = pi * c[0];
  T p = T(2);
  for (int m = 1; m < n; ++m) {
    p /= T(4);
    // t^{2m} in terms of T_{2m-2r}: gamma_r = C(2m, r), halved at r = m
    T gam = T(1);
    T sum = c[m];
    for (int r = 1; r <= m; ++r) {
      if (r < m)
        gam *= T(2 * m + 1 - r) / T(r);
      else
        gam *= T(m + 1) / T(2 * m);
      sum += ((r % 2) ? -gam : gam) * c[m - r];
    }
    mv.values[2 * m] = ((m % 2) ? -pi : pi) * p * sum;
  }
  return mv;
}

template <class T>
BasicMomentVector<T> log_weight_moments(int n, T sigma, bool integer_sigma,
                                        bool modified) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1", n);
  if (!(sigma > T(-1)))
    throw Error(ErrorKind::InvalidOption, "sigma must exceed -1");
  const bool is_int = num::floor(sigma) == sigma && sigma >= T(0);
  if (integer_sigma != is_int)
    throw Error(ErrorKind::InvalidOption,
                "integer_sigma flag does not match sigma");
  BasicMomentVector<T> m;
  m.values.assign(2 * n, T(0));
  const T s1 = sigma + T(1);
  if (!modified) {
    for (int k = 0; k < 2 * n; ++k) {
      const T d = s1 + T(k);
      m.values[k] = T(1) / (d * d);
    }
    return m;
  }
  const int isig = integer_sigma ? int(sigma) : -1;
  T ck = T(1);  // k!^2 / (2k)!
  T prod = T(1);
  T harm = T(1) / s1;
  for (int k = 0; k < 2 * n; ++k) {
    if (k > 0) {
      ck *= T(k) / T(2 * (2 * k - 1));
    }
    if (integer_sigma && isig < k) {
      // sigma!^2 (k-sigma-1)! / (k+sigma+1)!
      T v = T(1);
      for (int j = 1; j <= isig; ++j) v *= T(j) * T(j);
      for (int j = k - isig; j <= k + isig + 1; ++j) v /= T(j);
      m.values[k] = ck * (((k - isig) % 2) ? -v : v);
    } else {
      if (k > 0) {
        const T r = T(k);
        prod *= (s1 - r) / (s1 + r);
        harm += T(1) / (s1 + r) - T(1) / (s1 - r);
      }
      m.values[k] = ck / s1 * harm * prod;
    }
  }
  // reference: monic shifted Legendre polynomials
  BasicRecurrenceTable<T> ref;
  ref.alpha.assign(2 * n - 1, T(0.5));
  ref.beta.assign(2 * n - 1, T(0));
  ref.beta[0] = T(1);
  for (int k = 1; k < 2 * n - 1; ++k) {
    const T kk = T(k);
    ref.beta[k] = T(0.25) / (T(4) - T(1) / (kk * kk));
  }
  m.reference = ref;
  return m;
}

#define ORTHOGEN_INSTANTIATE(T)                                                    \
  template ChebyshevResult<T> modified_chebyshev<T>(int, const BasicMomentVector<T>&, \
                                                    T);                            \
  template std::vector<T> elliptic_fourier<T>(int, T, T);                          \
  template BasicMomentVector<T> elliptic_modified_moments<T>(int, T, T);           \
  template BasicMomentVector<T> elliptic_ordinary_moments<T>(int, T, T);           \
  template BasicMomentVector<T> log_weight_moments<T>(int, T, bool, bool);

ORTHOGEN_INSTANTIATE(double)
ORTHOGEN_INSTANTIATE(Quad)

}  // namespace orthogen
