#include <cmath>

#include "doctest.h"
#include "orthogen/classical.hpp"
#include "orthogen/fixtures.hpp"
#include "orthogen/modify.hpp"
#include "orthogen/reference.hpp"
#include "support.hpp"

using namespace orthogen;

namespace {
const double eps = precision<double>::epsilon();

RecurrenceTable legendre(int n) { return classical_coeffs(ClassicalKind::legendre(), n); }

ModificationKind kind(Modification op, double x, double y = 0) {
  ModificationKind k;
  k.op = op;
  k.x = x;
  k.y = y;
  return k;
}
}  // namespace

TEST_CASE("multiplication by a linear factor raises the log-weight exponent") {
  const auto base = convert<double>(reference::log_weight_table(21, Quad(-0.5)));
  const auto want = convert<double>(reference::log_weight_table(20, Quad(0.5)));
  const auto got = chri(kind(Modification::MulLinear, 0), base);
  REQUIRE(got.size() == 20);
  CHECK(got.beta[0] == doctest::Approx(4.0 / 9).epsilon(1e-14));
  CHECK(got.alpha[0] == doctest::Approx(0.36).epsilon(1e-14));
  CHECK(test::max_rel(got.beta, want.beta, 20) <= 1e-12);
  CHECK(test::max_abs(got.alpha, want.alpha, 20) <= 1e-12);
}

TEST_CASE("quadratic factors") {
  const auto leg = legendre(31);
  const auto q = chri(kind(Modification::MulQuadratic, 0, 1), leg);
  CHECK(q.beta[0] == doctest::Approx(8.0 / 3).epsilon(1e-15));
  auto sk = kind(Modification::MulSymQuadratic, 0, 0.5);
  sk.symmetric = true;
  const auto s = chri(sk, leg);
  const auto g = chri(kind(Modification::MulQuadratic, 0, 0.5), leg);
  for (int k = 0; k < 30; ++k) {
    CHECK(s.alpha[k] == 0.0);
    CHECK(test::rel(s.beta[k], g.beta[k]) <= 50 * eps);
    CHECK(std::fabs(g.alpha[k]) <= 50 * eps);
  }
  auto bad = sk;
  bad.y = 0;
  CHECK_THROWS_AS(chri(bad, leg), Error);
  CHECK_THROWS_AS(chri(kind(Modification::MulQuadratic, 0, 0), leg), Error);
}

TEST_CASE("squared linear factor by QR matches two linear steps") {
  const auto leg = legendre(32);
  const double x = -1.2;
  const auto qr = chri(kind(Modification::MulLinearSquaredQR, x), leg, 30);
  const auto once = chri(kind(Modification::MulLinear, x), leg, 31);
  const auto twice = chri(kind(Modification::MulLinear, x), once, 30);
  CHECK(test::max_rel(qr.beta, twice.beta, 30) <= 1e-12);
  CHECK(test::max_abs(qr.alpha, twice.alpha, 30) <= 1e-12);
  // a factor vanishing inside the support gives the induced measure
  const auto ind = chri(kind(Modification::MulLinearSquaredQR, 0), leg, 30);
  CHECK(ind.beta[0] == doctest::Approx(2.0 / 3).epsilon(1e-15));
  const auto m2 = fixtures::induced_legendre(20, 2);
  CHECK(m2.beta[0] == doctest::Approx(8.0 / 45).epsilon(1e-14));
  CHECK(std::fabs(m2.beta[1] - .5238095238) <= 1e-9);
}

TEST_CASE("Cauchy integrals of the Legendre measure") {
  const auto leg = legendre(600);
  const std::complex<double> z(2, 0);
  const int nu0 = nu0_estimate<double>(Nu0Family::Jacobi, 10, z, eps);
  const auto rho = knum(10, nu0, 500, z, eps, leg);
  const double l3 = std::log(3.0);
  CHECK(std::abs(rho.values[0] - l3) <= 4 * eps);
  CHECK(std::abs(rho.values[1] - (2 * l3 - 2)) <= 8 * eps);
  CHECK(rho.nu_used >= nu0);
  const auto K = kern(10, nu0, 500, z, eps, leg);
  CHECK(std::abs(K.values[0] - l3) <= 4 * eps);
  CHECK(std::abs(K.values[1] - (2 * l3 - 2) / 2) <= 8 * eps);
  try {
    knum(10, 600, 500, z, eps, leg);
    FAIL("expected nu0 > numax to be rejected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
  CHECK_THROWS_AS(knum(10, 5, 40, std::complex<double>(1.0 + 1e-12, 0), eps, leg), Error);
}

TEST_CASE("division by a linear factor") {
  const int n = 40;
  const auto leg = legendre(800);
  for (double x : {-1.001, -1.01, -1.1}) {
    const auto k = kind(Modification::DivLinear, x);
    const int nu0 = nu0_estimate<double>(Nu0Family::Jacobi, 2 * n - 1, {x, 0}, 10 * eps);
    const auto g = gchri(k, n, std::max(nu0, 2 * n), 800, 10 * eps, leg);
    const auto want = reference::legendre_division_table(n, Quad(x));
    CHECK(test::max_rel(g.table.beta, want.beta, n) <= 1e-12);
    CHECK(test::max_abs(g.table.alpha, want.alpha, n) <= 1e-12);
  }
  // close to the support both routes agree
  const auto c = chri(kind(Modification::DivLinear, -1.001), leg, 21);
  const int nu0 = nu0_estimate<double>(Nu0Family::Jacobi, 41, {-1.001, 0}, 10 * eps);
  const auto g = gchri(kind(Modification::DivLinear, -1.001), 21, nu0, 800, 10 * eps, leg);
  CHECK(test::max_rel(c.beta, g.table.beta, 21) <= 1e-10);
  CHECK_THROWS_AS(gchri(kind(Modification::MulLinear, 2), 10, 40, 800, eps, leg), Error);
}

TEST_CASE("division by a quadratic factor on an ellipse") {
  const int n = 20;
  const double rho = 1.5, theta = M_PI / 4;
  const double x = (rho + 1 / rho) / 2 * std::cos(theta);
  const double y = (rho - 1 / rho) / 2 * std::sin(theta);
  const auto leg = legendre(800);
  const auto k = kind(Modification::DivQuadratic, x, y);
  const int nu0 = nu0_estimate<double>(Nu0Family::Jacobi, 2 * n - 1, {x, y}, eps);
  const auto g = gchri(k, n, nu0, 800, eps, leg);
  const auto want =
      reference::legendre_division_table_discretized(n, Quad(x), Quad(y), 300);
  CHECK(test::max_rel(g.table.beta, want.beta, n) <= 1e-12);
  CHECK(test::max_abs(g.table.alpha, want.alpha, n) <= 1e-12);
  const auto c = chri(k, leg, n + 1);
  CHECK(test::max_rel(c.beta, want.beta, n) <= 1e-10);
}

TEST_CASE("starting index estimates") {
  const int n = 79;
  int last = 1 << 30;
  for (double x : {-1.001, -1.01, -1.04, -1.07, -1.1}) {
    const int v = nu0_estimate<double>(Nu0Family::Jacobi, n, {x, 0}, eps);
    CHECK(v > n);
    CHECK(v < last);
    last = v;
  }
  // coarser tolerance needs fewer terms
  CHECK(nu0_estimate<double>(Nu0Family::Jacobi, n, {-1.01, 0}, 1e-7) <
        nu0_estimate<double>(Nu0Family::Jacobi, n, {-1.01, 0}, eps));
  int h = 0;
  for (double y : {4.0, 2.0, 1.0, 0.5}) {
    const int v = nu0_estimate<double>(Nu0Family::Hermite, 20, {0, y}, eps);
    CHECK(v > h);
    h = v;
  }
  CHECK(nu0_estimate<double>(Nu0Family::GenLaguerre, 20, {-1, 0}, eps) > 20);
  CHECK(nu0_estimate<double>(Nu0Family::Generic, 20, {5, 0}, eps) == 60);
  CHECK_THROWS_AS(nu0_estimate<double>(Nu0Family::Jacobi, 20, {0.5, 0}, eps), Error);
  CHECK_THROWS_AS(nu0_estimate<double>(Nu0Family::Hermite, 20, {1, 0}, eps), Error);
}

TEST_CASE("chri argument checks") {
  const auto leg = legendre(3);
  try {
    chri(kind(Modification::MulLinear, 2), leg, 1);
    FAIL("expected n < 2 to be rejected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
  CHECK_THROWS_AS(chri(kind(Modification::MulLinear, 2), leg, 5), Error);
}
