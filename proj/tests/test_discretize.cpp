#include <cmath>

#include "doctest.h"
#include "orthogen/classical.hpp"
#include "orthogen/discrete.hpp"
#include "orthogen/discretize.hpp"
#include "orthogen/fixtures.hpp"
#include "orthogen/momentalg.hpp"
#include "orthogen/quadrule.hpp"
#include "orthogen/reference.hpp"
#include "support.hpp"

using namespace orthogen;

namespace {
const double eps = precision<double>::epsilon();
}

TEST_CASE("discretization schedule") {
  CHECK(discretization_size(40, 1, 0) == 80);
  CHECK(discretization_size(40, 1, 1) == 81);
  CHECK(discretization_size(40, 1, 2) == 121);
  CHECK(discretization_size(40, 1, 4) == 201);
  CHECK(discretization_size(40, 1, 5) == 281);
  CHECK(discretization_size(80, 2, 0) == 80);
  CHECK(discretization_size(80, 2, 1) == 81);
}

TEST_CASE("Fejer rule") {
  const auto one = fejer_rule<double>(1);
  CHECK(one.nodes[0] == 0.0);
  CHECK(one.weights[0] == doctest::Approx(2));
  const auto three = fejer_rule<double>(3);
  CHECK(three.nodes[0] == doctest::Approx(-std::sqrt(3.0) / 2));
  CHECK(std::fabs(three.nodes[1]) <= eps);
  CHECK(three.nodes[2] == doctest::Approx(std::sqrt(3.0) / 2));
  for (int N : {2, 7, 50, 301}) {
    const auto q = fejer_rule<double>(N);
    double s = 0;
    for (double w : q.weights) {
      CHECK(w > 0);
      s += w;
    }
    CHECK(s == doctest::Approx(2).epsilon(1e-14));
    for (int k = 1; k < N; ++k) CHECK(q.nodes[k] > q.nodes[k - 1]);
    // exact through degree N-1
    for (int j = 0; j < N && j < 30; ++j) {
      double m = 0;
      for (int k = 0; k < N; ++k) m += q.weights[k] * std::pow(q.nodes[k], j);
      const double want = j % 2 ? 0 : 2.0 / (j + 1);
      CHECK(std::fabs(m - want) <= 1e-14);
    }
  }
  CHECK_THROWS_AS(fejer_rule<double>(0), Error);
}

TEST_CASE("general-purpose discretizer maps") {
  MeasureSpec s;
  auto one = [](double, int) { return 1.0; };
  s.components.push_back({0, 1, one});
  const auto d = gp_discretizer(2, 0, s);
  CHECK(d.nodes[0] == doctest::Approx((1 - std::sqrt(2.0) / 2) / 2));
  CHECK(d.nodes[1] == doctest::Approx((1 + std::sqrt(2.0) / 2) / 2));
  CHECK(d.weights[0] + d.weights[1] == doctest::Approx(1));

  MeasureSpec h;
  h.components.push_back({0, infinity<double>(), one});
  const auto dh = gp_discretizer(1, 0, h);
  CHECK(dh.nodes[0] == doctest::Approx(1));
  CHECK(dh.weights[0] == doctest::Approx(2 * 2));

  MeasureSpec l;
  l.components.push_back({-infinity<double>(), 0.5, one});
  const auto dl = gp_discretizer(1, 0, l);
  CHECK(dl.nodes[0] == doctest::Approx(-0.5));

  MeasureSpec r;
  r.components.push_back({-infinity<double>(), infinity<double>(), one});
  const auto dr = gp_discretizer(1, 0, r);
  CHECK(dr.nodes[0] == 0.0);
  CHECK(dr.weights[0] == doctest::Approx(2));
  CHECK_THROWS_AS(gp_discretizer(1, 1, r), Error);
}

TEST_CASE("Chebyshev weight plus a constant") {
  struct Row {
    int k;
    double b1, b10, b100;
  };
  const Row rows[] = {
      {1, .4351692451, .3559592080, .3359108398},
      {5, .2510395775, .2535184776, .2528129500},
      {12, .2500610870, .2504824840, .2505324193},
      {25, .2500060034, .2500682357, .2501336338},
      {51, .2500006590, .2500082010, .2500326887},
      {79, .2500001724, .2500021136, .2500127264},
  };
  const double tol = 5000 * eps;
  const auto r1 = fixtures::chebyshev_plus_constant(80, 1, tol);
  const auto r10 = fixtures::chebyshev_plus_constant(80, 10, tol);
  const auto r100 = fixtures::chebyshev_plus_constant(80, 100, tol);
  for (const auto* r : {&r1, &r10, &r100}) {
    CHECK(r->report.kount == 1);
    CHECK(r->report.ncap == 81);
    for (double a : r->table.alpha) CHECK(std::fabs(a) <= 1e-14);
  }
  CHECK(r1.table.beta[0] == doctest::Approx(M_PI + 2).epsilon(1e-14));
  CHECK(r100.table.beta[0] == doctest::Approx(M_PI + 200).epsilon(1e-14));
  for (const auto& row : rows) {
    CHECK(std::fabs(r1.table.beta[row.k] - row.b1) <= 6e-11);
    CHECK(std::fabs(r10.table.beta[row.k] - row.b10) <= 6e-11);
    CHECK(std::fabs(r100.table.beta[row.k] - row.b100) <= 6e-11);
  }
  const auto l = fixtures::chebyshev_plus_constant(80, 10, tol, Engine::Lanczos);
  for (int k = 0; k < 80; ++k) CHECK(test::rel(l.table.beta[k], r10.table.beta[k]) <= 10 * tol);
}

TEST_CASE("Jacobi weight with an endpoint mass") {
  const auto ref = jacobi_point_mass_reference<double>(40, 0, 0, 1);
  CHECK(ref.alpha[0] == doctest::Approx(-0.5));
  CHECK(ref.beta[0] == doctest::Approx(2));
  const auto r = fixtures::jacobi_with_endpoint_mass(40, 0, 0, 1, 5000 * eps);
  CHECK(r.table.alpha[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(r.table.beta[0] == doctest::Approx(2).epsilon(1e-14));
  CHECK(r.report.kount == 1);
  const auto j = fixtures::jacobi_with_endpoint_mass(40, -0.6, 0.8, 4, 5000 * eps,
                                                     Engine::Lanczos);
  const auto want = jacobi_point_mass_reference<Quad>(40, -0.6, 0.8, 4);
  CHECK(test::max_rel(j.table.beta, want.beta, 40) <= 1e-10);
  CHECK(test::max_abs(j.table.alpha, want.alpha, 40) <= 1e-10);

  // y = 0 is the normalized Jacobi table
  const auto y0 = jacobi_point_mass_reference<double>(30, 0.4, -0.2, 0);
  auto jac = classical_coeffs(ClassicalKind::jacobi(0.4, -0.2), 30);
  jac.beta[0] = 1;
  for (int k = 0; k < 30; ++k) {
    CHECK(y0.beta[k] == doctest::Approx(jac.beta[k]).epsilon(1e-15));
    CHECK(y0.alpha[k] == doctest::Approx(jac.alpha[k]).epsilon(1e-15));
  }
  CHECK_THROWS_AS(jacobi_point_mass_reference<double>(5, -1, 0, 1), Error);
}

TEST_CASE("logistic density") {
  const auto r = fixtures::logistic(40, 1000 * eps);
  struct Row {
    int k;
    double b;
  };
  const Row rows[] = {{0, 1.0},
                      {1, 3.289868133696452872944830},
                      {6, 89.44760352315950188817832},
                      {15, 555.7827839879296775066697},
                      {26, 1668.580222268668421827788},
                      {39, 3753.534025194898387722354}};
  for (const auto& row : rows) CHECK(test::rel(r.table.beta[row.k], row.b) <= 1e-11);
  for (double a : r.table.alpha) CHECK(std::fabs(a) <= 1e-10);
  MESSAGE("logistic: kount " << r.report.kount << " ncap " << r.report.ncap << ", "
                             << r.warnings.size() << " warnings");
  const auto l = fixtures::logistic(40, 1000 * eps, Engine::Lanczos);
  for (int k = 0; k < 40; ++k)
    CHECK(test::rel(l.table.beta[k], r.table.beta[k]) <= 10 * 1000 * eps);
}

TEST_CASE("half-range Hermite on the four-piece split") {
  struct Row {
    int k;
    double a, b;
  };
  const Row rows[] = {
      {0, .5641895835477562869480795, .8862269254527580136490837},
      {1, .9884253928468002854870634, .1816901138162093284622325},
      {6, 2.080620336400833224817622, 1.002347851011010842224538},
      {15, 3.214270636071128227448914, 2.500927917133702669954321},
      {26, 4.203048578872001952660277, 4.333867901229950443604430},
      {39, 5.131532886894296519319692, 6.500356237707132938035155},
  };
  for (Engine e : {Engine::Stieltjes, Engine::Lanczos}) {
    const auto r = fixtures::half_range_hermite(40, 1000 * eps, e);
    for (const auto& row : rows) {
      CHECK(test::rel(r.table.alpha[row.k], row.a) <= 1e-11);
      CHECK(test::rel(r.table.beta[row.k], row.b) <= 1e-11);
    }
  }
}

TEST_CASE("discretized modified Chebyshev on the elliptic weight") {
  const auto ref = reference::elliptic_table(40, Quad(0.1));
  const auto r = fixtures::elliptic_by_mccheb(40, 0.1, 100 * 7.105e-15);
  CHECK(r.report.kount == 1);
  CHECK(r.report.ncap == 81);
  CHECK(test::max_rel(r.table.beta, ref.beta, 40) <= 1e-10);
  for (double om : {0.3, 0.5, 0.7}) {
    const auto q = fixtures::elliptic_by_mccheb(40, om, 100 * 7.105e-15);
    CHECK(q.report.kount == 1);
  }
  const auto s = fixtures::elliptic_by_mccheb(40, 0.99, 100 * 7.105e-15);
  CHECK(s.report.kount == 4);
  CHECK(s.report.ncap == 201);
  const auto full = fixtures::elliptic_by_mccheb(40, 0.99, 100 * eps);
  const auto ref99 = reference::elliptic_table(40, Quad(0.99));
  CHECK(test::max_rel(full.table.beta, ref99.beta, 40) <= 1e-12);
}

TEST_CASE("iteration properties") {
  // exact discretizers converge in the first comparison
  MeasureSpec s;
  s.components.push_back({-1, 1, [](double, int) { return 0.0; }});
  DiscretizationPolicy p;
  p.eps = 100 * eps;
  const auto leg = classical_coeffs(ClassicalKind::legendre(), 500);
  p.rule = [&](int N, int, int& status) {
    status = 0;
    const auto g = gauss_rule(N, leg);
    return DiscreteMeasure{g.nodes, g.weights};
  };
  const auto r = mcdis(20, s, p);
  CHECK(r.report.kount == 1);
  // the table equals one engine run on the final measure
  const auto d = discretize_measure(r.report.ncap, s, p.rule);
  const auto once = stieltjes(20, d);
  for (int k = 0; k < 20; ++k) CHECK(once.beta[k] == r.table.beta[k]);
  // zero masses change nothing
  auto sm = s;
  sm.masses.push_back({0.3, 0});
  const auto rm = mcdis(20, sm, p);
  for (int k = 0; k < 20; ++k) CHECK(test::rel(rm.table.beta[k], r.table.beta[k]) <= 4 * eps);
}

TEST_CASE("discretization errors") {
  MeasureSpec s;
  s.components.push_back({0, 1, [](double, int) { return 1.0; }});
  DiscretizationPolicy p;
  p.ncapm = 30;
  try {
    mcdis(20, s, p);
    FAIL("expected non-convergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConvergence);
    CHECK(e.index() == 30);
  }
  p.ncapm = 500;
  s.components.push_back({1, 2, [](double, int) { return 1.0; }});
  p.rule = [](int N, int i, int& status) {
    status = i == 1 ? 3 : 0;
    DiscreteMeasure d;
    const auto f = fejer_rule<double>(N);
    d.nodes = f.nodes;
    d.weights = f.weights;
    return d;
  };
  try {
    mcdis(5, s, p);
    FAIL("expected failing component");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidOption);
    CHECK(e.index() == 1);
  }
  p.idelta = 3;
  CHECK_THROWS_AS(mcdis(5, s, p), Error);
  p.idelta = 1;
  CHECK_THROWS_AS(mcdis(0, s, p), Error);
}

TEST_CASE("tiny weights are flushed with a warning") {
  MeasureSpec s;
  s.components.push_back({0, 1, [](double t, int) { return t > 0.5 ? 1e-310 : 1.0; }});
  const auto d = discretize_measure(300, s, UserRule<double>{}, nullptr);
  Warnings w;
  discretize_measure(300, s, UserRule<double>{}, &w);
  REQUIRE(w.size() == 1);
  CHECK(w[0].kind == ErrorKind::Underflow);
  CHECK(w[0].index == 150);
  for (double x : d.weights) CHECK((x == 0 || x >= precision<double>::tiny()));
}
