#include "orthogen/modify.hpp"

#include <algorithm>
#include <string>

#include "orthogen/momentalg.hpp"
#include "orthogen/quadrule.hpp"

namespace orthogen {

namespace {

template <class T>
using C = std::complex<T>;

template <class T>
void require_nonzero(const C<T>& v, int k) {
  if (v.real() == T(0) && v.imag() == T(0))
    throw Error(ErrorKind::SingularSystem,
                "vanishing denominator at step " + std::to_string(k), k);
}

template <class T>
void require_nonzero(T v, int k) {
  if (v == T(0))
    throw Error(ErrorKind::SingularSystem,
                "vanishing denominator at step " + std::to_string(k), k);
}

// Multiplication by (t - x): one LR step. Produces n coefficients from
// a[0..n-1], b[0..n]; `extra_beta` additionally returns beta-hat_n, which
// needs only a[n] beyond that.
template <class S>
void mul_linear(int n, const std::vector<S>& a, const std::vector<S>& b, S x,
                std::vector<S>& ah, std::vector<S>& bh, bool extra_beta) {
  ah.assign(n, S(0));
  bh.assign(n + (extra_beta ? 1 : 0), S(0));
  S e = S(0);
  for (int k = 0; k < n; ++k) {
    const S q = a[k] - x - e;
    require_nonzero(q, k);
    bh[k] = q * e;
    e = b[k + 1] / q;
    ah[k] = x + q + e;
  }
  if (extra_beta) {
    const S q = a[n] - x - e;
    bh[n] = q * e;
  }
  bh[0] = b[0] * (a[0] - x);
}

// Division by (t - x) given m0 = integral of dl/(t-x): inverse LR step.
template <class S>
void div_linear(int n, const std::vector<S>& a, const std::vector<S>& b, S x, S m0,
                std::vector<S>& ah, std::vector<S>& bh) {
  ah.assign(n, S(0));
  bh.assign(n, S(0));
  require_nonzero(m0, 0);
  bh[0] = m0;
  S q = b[0] / m0;
  ah[0] = x + q;
  for (int k = 0; k + 1 < n; ++k) {
    const S e = a[k] - x - q;
    require_nonzero(e, k + 1);
    bh[k + 1] = q * e;
    q = b[k + 1] / e;
    ah[k + 1] = x + q + e;
  }
}

// One shifted QR step on the Jacobi matrix: multiplication by (t - x)^2.
// Squared-quantity form; the division by c0 is replaced by the alternative
// expression once c0 is at rounding level.
template <class T>
void mul_squared_qr(int n, const std::vector<T>& a, const std::vector<T>& b, T x,
                    std::vector<T>& ah, std::vector<T>& bh) {
  ah.assign(n, T(0));
  bh.assign(n, T(0));
  const T eps = T(5) * precision<T>::epsilon();
  T u = T(0), c = T(1), c0 = T(0), s = T(0);
  for (int k = 0; k < n; ++k) {
    const T gamma = a[k] - x - u;
    const T cm1 = c0;
    c0 = c;
    const T p2 = num::abs(c0) > eps ? gamma * gamma / c0 : cm1 * b[k];
    if (k > 0) bh[k] = s * (p2 + b[k + 1]);
    const T den = p2 + b[k + 1];
    require_nonzero(den, k);
    s = b[k + 1] / den;
    c = p2 / den;
    u = s * (gamma + a[k + 1] - x);
    ah[k] = gamma + u + x;
  }
  bh[0] = b[0] * (b[1] + (x - a[0]) * (x - a[0]));
}

template <class T>
bool is_symmetric(const BasicRecurrenceTable<T>& t, int count) {
  for (int k = 0; k < count; ++k)
    if (t.alpha[k] != T(0)) return false;
  return true;
}

template <class T>
std::vector<C<T>> complexify(const std::vector<T>& v) {
  return std::vector<C<T>>(v.begin(), v.end());
}

// The Cauchy integral of dl at z from all available coefficients.
template <class T>
C<T> cauchy_integral(const BasicRecurrenceTable<T>& t, C<T> z) {
  const int numax = int(t.size());
  const int nu0 = std::min(numax, 1 + numax / 4);
  return knum<T>(0, nu0, numax, z, precision<T>::epsilon() * T(10), t).values[0];
}

}  // namespace

template <class T>
BasicRecurrenceTable<T> chri(const BasicModificationKind<T>& kind,
                             const BasicRecurrenceTable<T>& t, int n) {
  validate_table(t, false);
  if (n < 0) n = int(t.size()) - 1;
  if (n < 2) throw Error(ErrorKind::OutOfRange, "chri needs n >= 2", 1);
  if (int(t.size()) < n + 1)
    throw Error(ErrorKind::OutOfRange, "chri needs n+1 input coefficients", 1);
  const auto& a = t.alpha;
  const auto& b = t.beta;
  const T x = kind.x, y = kind.y;
  const bool needs_y = kind.op == Modification::MulQuadratic ||
                       kind.op == Modification::MulSymQuadratic ||
                       kind.op == Modification::DivQuadratic ||
                       kind.op == Modification::DivSymQuadratic;
  if (needs_y && !(y > T(0)))
    throw Error(ErrorKind::InvalidOption, "quadratic factors need y > 0", 2);
  const bool sym_kind = kind.op == Modification::MulSymQuadratic ||
                        kind.op == Modification::DivSymQuadratic;
  if (sym_kind && !kind.symmetric && !is_symmetric(t, n + 1))
    throw Error(ErrorKind::InvalidOption,
                "symmetric modification of a non-symmetric table", 2);

  BasicRecurrenceTable<T> out;
  out.indefinite = true;
  switch (kind.op) {
    case Modification::MulLinear:
      mul_linear(n, a, b, x, out.alpha, out.beta, false);
      break;
    case Modification::MulQuadratic:
    case Modification::MulSymQuadratic: {
      // two complex LR steps with the conjugate pair z, conj(z)
      const C<T> z(sym_kind ? T(0) : x, y);
      std::vector<C<T>> a1, b1, a2, b2;
      mul_linear<C<T>>(n, complexify(a), complexify(b), z, a1, b1, true);
      mul_linear<C<T>>(n, a1, b1, std::conj(z), a2, b2, false);
      out.alpha.resize(n);
      out.beta.resize(n);
      for (int k = 0; k < n; ++k) {
        out.alpha[k] = sym_kind ? T(0) : a2[k].real();
        out.beta[k] = b2[k].real();
      }
      const T d = a[0] - z.real();
      out.beta[0] = b[0] * (b[1] + d * d + y * y);
      break;
    }
    case Modification::DivLinear: {
      const T hr = kind.hr ? *kind.hr : cauchy_integral(t, C<T>(x, T(0))).real();
      div_linear(n, a, b, x, -hr, out.alpha, out.beta);
      break;
    }
    case Modification::DivQuadratic:
    case Modification::DivSymQuadratic: {
      const C<T> z(sym_kind ? T(0) : x, y);
      T hr, hi;
      if (kind.hi && (sym_kind || kind.hr)) {
        hi = *kind.hi;
        hr = sym_kind ? T(0) : *kind.hr;
      } else {
        const C<T> h = cauchy_integral(t, z);
        hr = h.real();
        hi = h.imag();
      }
      std::vector<C<T>> a1, b1, a2, b2;
      div_linear<C<T>>(n, complexify(a), complexify(b), z, C<T>(-hr, -hi), a1, b1);
      div_linear<C<T>>(n, a1, b1, std::conj(z), C<T>(-hi / y, T(0)), a2, b2);
      out.alpha.resize(n);
      out.beta.resize(n);
      for (int k = 0; k < n; ++k) {
        out.alpha[k] = sym_kind ? T(0) : a2[k].real();
        out.beta[k] = b2[k].real();
      }
      out.beta[0] = -hi / y;
      break;
    }
    case Modification::MulLinearSquaredQR:
      mul_squared_qr(n, a, b, x, out.alpha, out.beta);
      break;
    default:
      throw Error(ErrorKind::InvalidOption, "unknown modification", 2);
  }
  out.indefinite = !std::all_of(out.beta.begin(), out.beta.end(),
                                [](T v) { return v > T(0); });
  return out;
}

template <class T>
BasicComplexSequence<T> knum(int n, int nu0, int numax, std::complex<T> z, T eps,
                             const BasicRecurrenceTable<T>& base) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "n must be nonnegative", -1);
  if (nu0 > numax)
    throw Error(ErrorKind::OutOfRange, "nu0 exceeds numax", nu0);
  if (numax > int(base.size()))
    throw Error(ErrorKind::OutOfRange, "base table shorter than numax", numax);
  if (!(eps > T(0))) eps = precision<T>::epsilon();
  const int np1 = n + 1;
  if (nu0 < np1) nu0 = np1;
  std::vector<C<T>> rho(np1, C<T>(0)), rold(np1);
  int nu = nu0 - 5;
  for (;;) {
    nu += 5;
    if (nu > numax)
      throw Error(ErrorKind::NonConvergence,
                  "backward recurrence did not converge by numax", numax);
    rold = rho;
    C<T> r(0);
    for (int j = nu - 1; j >= 0; --j) {
      const C<T> den = z - base.alpha[j] - r;
      require_nonzero(den, j);
      r = base.beta[j] / den;
      if (j < np1) rho[j] = r;
    }
    bool ok = true;
    for (int k = 0; k < np1 && ok; ++k)
      if (num::abs(rho[k] - rold[k]) > eps * num::abs(rho[k])) ok = false;
    if (ok) break;
  }
  for (int k = 1; k < np1; ++k) rho[k] *= rho[k - 1];
  BasicComplexSequence<T> out;
  out.values = std::move(rho);
  out.z = z;
  out.nu_used = nu;
  return out;
}

template <class T>
BasicComplexSequence<T> kern(int n, int nu0, int numax, std::complex<T> z, T eps,
                             const BasicRecurrenceTable<T>& base) {
  auto out = knum(n, nu0, numax, z, eps, base);
  C<T> p0(0), p(1);
  for (int k = 0; k < n; ++k) {
    const C<T> pm1 = p0;
    p0 = p;
    p = (z - base.alpha[k]) * p0 - base.beta[k] * pm1;
    out.values[k + 1] /= p;
  }
  return out;
}

template <class T>
GchriResult<T> gchri(const BasicModificationKind<T>& kind, int n, int nu0, int numax,
                     T eps, const BasicRecurrenceTable<T>& base) {
  if (kind.op != Modification::DivLinear && kind.op != Modification::DivQuadratic)
    throw Error(ErrorKind::InvalidOption, "gchri handles divisions only", 1);
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1", -1);
  if (nu0 > numax) throw Error(ErrorKind::OutOfRange, "nu0 exceeds numax", nu0);
  if (int(base.size()) < 2 * n - 1)
    throw Error(ErrorKind::OutOfRange, "base table too short", -1);
  const bool quad = kind.op == Modification::DivQuadratic;
  if (quad && !(kind.y > T(0)))
    throw Error(ErrorKind::InvalidOption, "quadratic divisor needs y > 0", 1);
  const C<T> z(kind.x, quad ? kind.y : T(0));
  const auto rho = knum(2 * n - 1, nu0, numax, z, eps, base);
  BasicMomentVector<T> m;
  m.values.resize(2 * n);
  for (int k = 0; k < 2 * n; ++k)
    m.values[k] = quad ? -rho.values[k].imag() / kind.y : -rho.values[k].real();
  m.reference = base;
  GchriResult<T> out;
  out.table = modified_chebyshev(n, m).table;
  out.nu_used = rho.nu_used;
  return out;
}

template <class T>
int nu0_estimate(Nu0Family family, int n, std::complex<T> z, T eps, T laguerre_a) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "n must be nonnegative", n);
  if (!(eps > T(0))) eps = precision<T>::epsilon();
  const T lne = num::log(T(1) / eps);
  const T big = T(1e9);
  switch (family) {
    case Nu0Family::Generic:
      return std::max(3 * n, n + 1);
    case Nu0Family::Jacobi: {
      // rho(z) = |z + sqrt(z^2-1)| is the sum of semiaxes of the ellipse
      // with foci +-1 through z; the minimal solution decays like rho^{-2k}
      C<T> w = num::sqrt(z * z - C<T>(1));
      if ((z.real() * w.real() + z.imag() * w.imag()) < T(0)) w = -w;
      const T r = num::abs(z + w);
      if (!(r > T(1)))
        throw Error(ErrorKind::InvalidOption, "z lies on the support [-1,1]");
      const T extra = -num::floor(-lne / (T(2) * num::log(r)));
      return int(std::min(T(n) + std::max(extra, T(1)), big));
    }
    case Nu0Family::Hermite: {
      const T y = num::abs(z.imag());
      if (!(y > T(0)))
        throw Error(ErrorKind::InvalidOption, "z lies on the Hermite support");
      const T s = num::sqrt(T(n + 1) / T(2)) + lne / (T(4) * y);
      return int(std::min(num::floor(T(2) * s * s) + T(1), big));
    }
    case Nu0Family::GenLaguerre: {
      const T h = (laguerre_a + T(1)) / T(2);
      const T phi = num::abs(num::atan2(z.imag(), z.real()));
      const T den = T(4) * num::sqrt(num::abs(z)) * num::cos((phi - num::pi<T>()) / T(2));
      if (!(den > T(0)))
        throw Error(ErrorKind::InvalidOption, "z lies on the Laguerre support");
      const T s = num::sqrt(T(n + 1) + h) + lne / den;
      const T v = num::floor(s * s - h) + T(1);
      return int(std::min(std::max(v, T(n + 1)), big));
    }
  }
  throw Error(ErrorKind::InvalidOption, "unknown family");
}

#define ORTHOGEN_INSTANTIATE(T)                                                    \
  template BasicRecurrenceTable<T> chri<T>(const BasicModificationKind<T>&,        \
                                           const BasicRecurrenceTable<T>&, int);   \
  template BasicComplexSequence<T> knum<T>(int, int, int, std::complex<T>, T,      \
                                           const BasicRecurrenceTable<T>&);        \
  template BasicComplexSequence<T> kern<T>(int, int, int, std::complex<T>, T,      \
                                           const BasicRecurrenceTable<T>&);        \
  template GchriResult<T> gchri<T>(const BasicModificationKind<T>&, int, int, int, \
                                   T, const BasicRecurrenceTable<T>&);             \
  template int nu0_estimate<T>(Nu0Family, int, std::complex<T>, T, T);

ORTHOGEN_INSTANTIATE(double)
ORTHOGEN_INSTANTIATE(Quad)

}  // namespace orthogen
