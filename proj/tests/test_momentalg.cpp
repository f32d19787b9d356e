#include <cmath>

#include "doctest.h"
#include "orthogen/classical.hpp"
#include "orthogen/momentalg.hpp"
#include "orthogen/quadrule.hpp"
#include "orthogen/reference.hpp"
#include "support.hpp"

using namespace orthogen;

namespace {
const double eps = precision<double>::epsilon();
}

TEST_CASE("initialization identities at n = 1") {
  MomentVector m;
  m.values = {3.0, 1.5};
  m.reference = RecurrenceTable{{0.25}, {0}};
  const auto r = modified_chebyshev(1, m);
  CHECK(r.table.beta[0] == 3.0);
  CHECK(r.table.alpha[0] == doctest::Approx(0.25 + 0.5));
  CHECK(r.normsq[0] == 3.0);
}

TEST_CASE("elliptic modified moments: Fourier route") {
  const auto m0 = elliptic_modified_moments<double>(10, 0.0);
  CHECK(m0.values[0] == doctest::Approx(M_PI).epsilon(1e-15));
  for (int k = 1; k < 20; ++k) CHECK(std::fabs(m0.values[k]) <= 1e-15);
  const auto m = elliptic_modified_moments<double>(40, 0.1);
  CHECK(m.values[0] == doctest::Approx(3.224882697440438796).epsilon(1e-15));
  for (int k = 1; k < 80; k += 2) CHECK(m.values[k] == 0.0);
  REQUIRE(m.reference);
  CHECK(m.reference->size() == 79);
}

TEST_CASE("elliptic tables against the tabulated values and the oracle") {
  const auto r = modified_chebyshev(80, elliptic_modified_moments<double>(80, 0.1));
  CHECK(r.table.beta[0] == doctest::Approx(3.224882697440438796).epsilon(1e-15));
  CHECK(r.table.beta[1] == doctest::Approx(0.5065840806382684).epsilon(1e-14));
  const auto h = modified_chebyshev(80, elliptic_modified_moments<double>(80, 0.5));
  CHECK(h.table.beta[1] == doctest::Approx(0.5430534189555363).epsilon(1e-14));
  for (double om : {0.3, 0.7, 0.999}) {
    const auto t = modified_chebyshev(40, elliptic_modified_moments<double>(40, om));
    const auto ref = reference::elliptic_table(40, Quad(om));
    CHECK(test::max_rel(t.table.beta, ref.beta, 40) <= 1e-12);
    CHECK(test::max_abs(t.table.alpha, ref.alpha, 40) <= 1e-14);
  }
}

TEST_CASE("extended elliptic oracle against the 28-digit table") {
  struct Row {
    const char* om;
    int k;
    const char* beta;
  };
  const Row rows[] = {
      {".1", 0, "3.224882697440438796459832725"},
      {".1", 1, ".5065840806382684475158495727"},
      {".1", 5, ".2499999953890031901881028267"},
      {".5", 1, ".5430534189555363746250333773"},
      {".5", 8, ".2499999846431723296083779480"},
      {".9", 0, "5.156184226696346376405141543"},
      {".9", 19, ".2499999956925950094629502830"},
      {".999", 1, ".7937821421385176965531719571"},
      {".999", 43, ".2499955822633680825859750068"},
      {".999", 79, ".2499998417688157876153069211"},
  };
  for (const auto& row : rows) {
    const auto t = reference::elliptic_table(80, parse_real<Quad>(row.om));
    const Quad want = parse_real<Quad>(row.beta);
    CHECK(double(fabsq((t.beta[row.k] - want) / want)) <= 1e-25);
  }
}

TEST_CASE("elliptic ordinary moments") {
  const auto o = elliptic_ordinary_moments<double>(4, 0.0);
  CHECK(o.values[0] == doctest::Approx(M_PI));
  CHECK(o.values[2] == doctest::Approx(M_PI / 2).epsilon(1e-15));
  CHECK(o.values[4] == doctest::Approx(3 * M_PI / 8).epsilon(1e-15));
  CHECK(!o.reference);
  for (double om : {0.2, 0.9}) {
    const auto a = elliptic_ordinary_moments<double>(6, om);
    const auto b = elliptic_modified_moments<double>(6, om);
    CHECK(a.values[0] == b.values[0]);
    // against Gauss-Chebyshev quadrature of t^j (1 - om t^2)^(-1/2)
    const int N = 400;
    for (int j = 0; j < 12; j += 2) {
      double s = 0;
      for (int r = 1; r <= N; ++r) {
        const double x = std::cos((2 * r - 1) * M_PI / (2 * N));
        s += std::pow(x, j) / std::sqrt(1 - om * x * x);
      }
      CHECK(test::rel(a.values[j], s * M_PI / N) <= 1e-13);
    }
  }
}

TEST_CASE("C_r backward recurrence") {
  const auto c = elliptic_fourier<double>(5, 0.5);
  // normalization C0 + 2 sum (-1)^r C_r = (1 - om2)^(-1/2) at theta = pi/2
  double s = c[0];
  const auto many = elliptic_fourier<double>(60, 0.5);
  for (int r = 1; r < 60; ++r) s += 2 * ((r % 2) ? -many[r] : many[r]);
  CHECK(s == doctest::Approx(1 / std::sqrt(0.5)).epsilon(1e-14));
  CHECK(c[0] == doctest::Approx(many[0]).epsilon(1e-15));
  CHECK_THROWS_AS(elliptic_fourier<double>(5, 1.0), Error);
}

TEST_CASE("log weight moments") {
  const auto o = log_weight_moments<double>(3, 0, true, false);
  CHECK(o.values[0] == 1.0);
  CHECK(o.values[1] == doctest::Approx(0.25));
  const auto m = log_weight_moments<double>(3, 0, true, true);
  CHECK(m.values[0] == 1.0);
  CHECK(m.values[1] == doctest::Approx(-0.25));
  for (double s : {-0.5, 0.5, 1.0}) {
    const auto v = log_weight_moments<double>(2, s, s == 1.0, true);
    CHECK(v.values[0] == doctest::Approx(1 / ((s + 1) * (s + 1))));
  }
  CHECK_THROWS_AS(log_weight_moments<double>(3, -1.0, false, true), Error);
  CHECK_THROWS_AS(log_weight_moments<double>(3, 0.5, true, true), Error);
}

TEST_CASE("log weight tables: tabulated 25-digit values") {
  struct Row {
    double sigma;
    int k;
    const char *a, *b;
  };
  const Row rows[] = {
      {-0.5, 0, ".1111111111111111111111111", "4.000000000000000000000000"},
      {-0.5, 12, ".4994971916094638566242202", ".06231277082877488477563886"},
      {-0.5, 99, ".4999916184024356271670789", ".06249733823051821636937156"},
      {0, 24, ".4998062839486146398501532", ".06247100084469111001639128"},
      {0, 99, ".4999877992015903283047919", ".06249832670616925926204896"},
      {0.5, 0, ".3600000000000000000000000", ".4444444444444444444444444"},
      {0.5, 48, ".4999567275223771727791521", ".06249115332711027176695932"},
      {0.5, 99, ".4999896931841789781887674", ".06249787251281682973825635"},
  };
  for (const auto& r : rows) {
    const auto q = reference::log_weight_table(100, Quad(r.sigma));
    const Quad a = parse_real<Quad>(r.a), b = parse_real<Quad>(r.b);
    CHECK(double(fabsq((q.alpha[r.k] - a) / a)) <= 1e-23);
    CHECK(double(fabsq((q.beta[r.k] - b) / b)) <= 1e-23);
    const bool is_int = r.sigma == 0;
    const auto t = modified_chebyshev(100, log_weight_moments<double>(100, r.sigma, is_int, true));
    CHECK(test::rel(t.table.beta[r.k], b) <= 5e-10);
    CHECK(test::rel(t.table.alpha[r.k], a) <= 5e-10);
  }
}

TEST_CASE("reference family reproduces itself") {
  // moments of Legendre against Legendre: nu_0 = 2, nu_k = 0
  const auto leg = classical_coeffs(ClassicalKind::legendre(), 59);
  MomentVector m;
  m.values.assign(60, 0);
  m.values[0] = 2;
  m.reference = leg;
  const auto r = modified_chebyshev(30, m);
  for (int k = 0; k < 30; ++k) {
    CHECK(test::rel(r.table.beta[k], leg.beta[k]) <= 10 * eps);
    CHECK(std::fabs(r.table.alpha[k]) <= 10 * eps);
  }
  // Jacobi(1/2,-1/2) moments against Legendre by a 60-point Gauss-Jacobi rule
  const auto jac = classical_coeffs(ClassicalKind::jacobi(0.5, -0.5), 60);
  const auto g = gauss_rule(60, jac);
  MomentVector mj;
  mj.values.assign(40, 0);
  mj.reference = leg;
  for (int i = 0; i < 60; ++i)
    for (int k = 0; k < 40; ++k) mj.values[k] += g.weights[i] * polynomial_eval(leg, k, g.nodes[i]);
  const auto rj = modified_chebyshev(20, mj);
  for (int k = 0; k < 20; ++k) CHECK(test::rel(rj.table.beta[k], jac.beta[k]) <= 1e-12);
}

TEST_CASE("scaling the moments") {
  const auto m = elliptic_modified_moments<double>(30, 0.5);
  auto big = m;
  for (auto& v : big.values) v *= 1024.5;
  const auto a = modified_chebyshev(30, m);
  const auto b = modified_chebyshev(30, big);
  CHECK(test::rel(b.table.beta[0], 1024.5 * a.table.beta[0]) <= eps);
  for (int k = 1; k < 30; ++k) CHECK(test::rel(b.table.beta[k], a.table.beta[k]) <= 4 * eps);
  for (int k = 0; k < 30; ++k) CHECK(std::fabs(b.table.alpha[k] - a.table.alpha[k]) <= 4 * eps);
  CHECK(test::rel(b.normsq[5], 1024.5 * a.normsq[5]) <= 4 * eps);
  // the scale argument is multiplied in and divided back out
  const auto c = modified_chebyshev(30, m, 1e-200);
  CHECK(c.table.beta[0] == m.values[0]);
  CHECK(test::rel(c.normsq[5], a.normsq[5]) <= 4 * eps);
  for (int k = 1; k < 30; ++k) CHECK(test::rel(c.table.beta[k], a.table.beta[k]) <= 4 * eps);
}

TEST_CASE("normsq and breakdown") {
  const auto r = modified_chebyshev(20, elliptic_modified_moments<double>(20, 0.3));
  CHECK(r.normsq[0] == r.table.beta[0]);
  for (double s : r.normsq) CHECK(s > 0);
  MomentVector bad;
  bad.values = {0, 1};
  CHECK_THROWS_AS(modified_chebyshev(1, bad), Error);
  MomentVector tiny_norm;
  tiny_norm.values = {1, 0, 1e-320, 0};
  try {
    modified_chebyshev(2, tiny_norm);
    FAIL("expected underflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Underflow);
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(modified_chebyshev(0, tiny_norm), Error);
}
