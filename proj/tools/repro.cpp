// Drivers regenerating the numerical experiments. Output is fully
// deterministic: timings are left out of the printed criterion details.

#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "cli.hpp"
#include "orthogen/compare.hpp"
#include "orthogen/criteria.hpp"
#include "orthogen/fixtures.hpp"
#include "orthogen/orthogen.hpp"
#include "orthogen/reference.hpp"

namespace orthogen::cli {

namespace {

using compare::max_abs;
using compare::max_rel;
using compare::rel;

const double kEps = precision<double>::epsilon();

struct Printer {
  std::ostream& out;
  bool ok = true;
  std::vector<std::string> failed;

  void operator()(const char* f, ...) __attribute__((format(printf, 2, 3))) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    out << buf << '\n';
  }

  void criterion(int id) {
    for (const auto& c : criteria::all())
      if (c.id == id) {
        const auto o = criteria::run(c);
        (*this)("criterion %d (%s): %s  %s", id, c.title, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
        if (!o.pass) {
          ok = false;
          failed.push_back("criterion " + std::to_string(id));
        }
      }
  }

  void check(bool pass, const std::string& what) {
    (*this)("check %s: %s", what.c_str(), pass ? "PASS" : "FAIL");
    if (!pass) {
      ok = false;
      failed.push_back(what);
    }
  }
};

std::string q25(Quad v) { return format_real(v, 25); }

// relative errors in alpha and beta of the ordinary-moment run; a breakdown
// counts as total loss from its index on
struct Errors {
  std::vector<double> alpha, beta;
};

Errors ordinary_errors(const MomentVector& m, const BasicRecurrenceTable<Quad>& want, int n) {
  Errors e{std::vector<double>(n, INFINITY), std::vector<double>(n, INFINITY)};
  for (int k = n; k >= 1; --k) {
    try {
      const auto r = modified_chebyshev(k, m);
      for (int j = 0; j < k; ++j) {
        e.alpha[j] = rel(r.table.alpha[j], want.alpha[j]);
        e.beta[j] = rel(r.table.beta[j], want.beta[j]);
      }
      break;
    } catch (const Error&) {
    }
  }
  return e;
}

void test1(Printer& p) {
  p("Elliptic weight (1-om2 t^2)^(-1/2) (1-t^2)^(-1/2), n = 80, modified moments");
  p("%6s %4s %36s %12s", "om2", "k", "beta_k (extended)", "err beta_k");
  struct Block {
    const char* om;
    std::vector<int> ks;
  };
  const Block blocks[] = {{".1", {0, 1, 5, 11, 18}}, {".3", {0, 1, 19, 43, 79}},
                          {".5", {0, 1, 8, 20, 35}}, {".7", {0, 1, 19, 43, 79}},
                          {".9", {0, 1, 19, 43, 79}}, {".99", {0, 1, 19, 43, 79}},
                          {".999", {0, 1, 19, 43, 79}}};
  for (const auto& b : blocks) {
    // the extended run takes the decimal om2, the binary64 run its rounding
    const auto r = modified_chebyshev(
        80, elliptic_modified_moments<double>(80, parse_real<double>(b.om)));
    const auto ref = reference::elliptic_table(80, parse_real<Quad>(b.om));
    for (int k : b.ks)
      p("%6s %4d %36s %12.3e", k == b.ks[0] ? b.om : "", k, q25(ref.beta[k]).c_str(),
        rel(r.table.beta[k], ref.beta[k]));
    p("%6s %4s %36s %12.3e", "", "max", "", max_rel(r.table.beta, ref.beta, 80));
  }
  p("%s", "");
  p("Ordinary moments, n = 20");
  p("%6s %4s %12s", "om2", "k", "err beta_k");
  for (double om : {0.1, 0.5, 0.9, 0.999}) {
    const auto ref = reference::elliptic_table(20, Quad(om));
    const auto e = ordinary_errors(elliptic_ordinary_moments<double>(20, om), ref, 20);
    for (int k : {1, 7, 13, 19})
      p("%6s %4d %12.3e", k == 1 ? format17(om).c_str() : "", k, e.beta[k]);
  }
  p("%s", "");
  p.criterion(1);
  p.criterion(2);
}

void test2(Printer& p) {
  p("Log weight t^sigma ln(1/t) on (0,1), n = 100, modified moments");
  p("%5s %4s %32s %32s %10s %10s", "sigma", "k", "alpha_k (extended)", "beta_k (extended)",
    "err alpha", "err beta");
  for (double s : {-0.5, 0.0, 0.5}) {
    const bool integer = s >= 0 && std::floor(s) == s;
    const auto r = modified_chebyshev(100, log_weight_moments<double>(100, s, integer, true));
    const auto ref = reference::log_weight_table(100, Quad(s));
    for (int k : {0, 12, 24, 48, 99})
      p("%5s %4d %32s %32s %10.3e %10.3e", k == 0 ? format17(s).c_str() : "", k, q25(ref.alpha[k]).c_str(),
        q25(ref.beta[k]).c_str(), rel(r.table.alpha[k], ref.alpha[k]),
        rel(r.table.beta[k], ref.beta[k]));
    p("%5s %4s %32s %32s %10.3e %10.3e", "", "max", "", "", max_rel(r.table.alpha, ref.alpha, 100),
      max_rel(r.table.beta, ref.beta, 100));
  }
  p("%s", "");
  p("Ordinary moments, n = 12");
  p("%4s %5s %10s %10s", "k", "sigma", "err alpha", "err beta");
  for (double s : {-0.5, 0.0, 0.5}) {
    const bool integer = s >= 0 && std::floor(s) == s;
    const auto ref = reference::log_weight_table(12, Quad(s));
    const auto e = ordinary_errors(log_weight_moments<double>(12, s, integer, false), ref, 12);
    for (int k : {2, 5, 8, 11}) p("%4d %5g %10.1e %10.1e", k, s, e.alpha[k], e.beta[k]);
  }
  p("%s", "");
  p.criterion(3);
  p.criterion(2);
}

void test3(Printer& p) {
  p("Equally spaced measure on [-1,1], N points: errors of Stieltjes and Lanczos");
  p("%5s %5s %12s %12s %12s %12s", "N", "n", "sti err a", "sti err b", "lan err a", "lan err b");
  for (int N : {40, 80, 160, 320}) {
    const auto d = discrete_chebyshev_measure<double>(N);
    const auto want = discrete_chebyshev_reference<Quad>(N);
    const auto s = stieltjes(N, d);
    const auto l = lanczos_reduce(N, d);
    const int step = N / 8;
    for (int n = step; n <= N; n += step) {
      const int k = n - 1;
      p("%5d %5d %12.3e %12.3e %12.3e %12.3e", N, n, std::fabs(s.alpha[k] - double(want.alpha[k])),
        rel(s.beta[k], want.beta[k]), std::fabs(l.alpha[k] - double(want.alpha[k])),
        rel(l.beta[k], want.beta[k]));
    }
  }
  p("%s", "");
  p.criterion(4);
}

void test4(Printer& p) {
  struct Row {
    int k;
    double v[3];
  };
  const Row rows[] = {{1, {.4351692451, .3559592080, .3359108398}},
                      {5, {.2510395775, .2535184776, .2528129500}},
                      {12, {.2500610870, .2504824840, .2505324193}},
                      {25, {.2500060034, .2500682357, .2501336338}},
                      {51, {.2500006590, .2500082010, .2500326887}},
                      {79, {.2500001724, .2500021136, .2500127264}}};
  const double cs[] = {1, 10, 100};
  DiscretizationResult<double> r[3];
  for (int i = 0; i < 3; ++i)
    r[i] = fixtures::chebyshev_plus_constant(80, cs[i], 5000 * kEps);
  p("(1-t^2)^(-1/2) + c on (-1,1), n = 80, tolerance 5000 eps, idelta = 2");
  p("%4s %20s %20s %20s", "k", "c = 1", "c = 10", "c = 100");
  p("%4d %20.10f %20.10f %20.10f", 0, r[0].table.beta[0], r[1].table.beta[0], r[2].table.beta[0]);
  double worst = 0;
  for (const auto& row : rows) {
    p("%4d %20.10f %20.10f %20.10f", row.k, r[0].table.beta[row.k], r[1].table.beta[row.k],
      r[2].table.beta[row.k]);
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::fabs(r[i].table.beta[row.k] - row.v[i]));
  }
  for (int i = 0; i < 3; ++i)
    p("c = %g: kount %d, ncap %d", cs[i], r[i].report.kount, r[i].report.ncap);
  p("largest difference from the 10-digit values %.2e", worst);
  p("%s", "");
  p.check(worst <= 5e-11, "tabulated digits reproduced");
  p.criterion(5);
}

void test5(Printer& p) {
  p("Jacobi weight plus a mass y at t = -1, n = 40, tolerance 5000 eps");
  p("%5s %5s %12s %12s   %s", "alpha", "beta", "err alpha", "err beta", "kount (y = .5 1 2 4 8)");
  for (double a : {-0.8, -0.4, 0.0, 0.4, 0.8, 1.0})
    for (double b : {-0.8, -0.4, 0.0, 0.4, 0.8, 1.0}) {
      double ea = 0, eb = 0;
      std::string kounts;
      for (double y : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const auto r = fixtures::jacobi_with_endpoint_mass(40, a, b, y, 5000 * kEps);
        const auto want = jacobi_point_mass_reference<Quad>(40, Quad(a), Quad(b), Quad(y));
        ea = std::max(ea, max_abs(r.table.alpha, want.alpha, 40));
        eb = std::max(eb, max_rel(r.table.beta, want.beta, 40));
        kounts += ' ' + std::to_string(r.report.kount);
      }
      p("%5g %5g %12.3e %12.3e  %s", a, b, ea, eb, kounts.c_str());
    }
  p("%s", "");
  p.criterion(6);
}

void test6(Printer& p) {
  struct Row {
    int k;
    const char* b;
  };
  const Row rows[] = {{0, "1"},
                      {1, "3.289868133696452872944830"},
                      {6, "89.44760352315950188817832"},
                      {15, "555.7827839879296775066697"},
                      {26, "1668.580222268668421827788"},
                      {39, "3753.534025194898387722354"}};
  p("Logistic density on the real line, n = 40, tolerance 1000 eps");
  const auto s = fixtures::logistic(40, 1000 * kEps, Engine::Stieltjes);
  const auto l = fixtures::logistic(40, 1000 * kEps, Engine::Lanczos);
  p("%4s %28s %12s %12s", "k", "beta_k (25 digits)", "err sti", "err lanczos");
  double worst = 0;
  for (const auto& row : rows) {
    const Quad want = parse_real<Quad>(row.b);
    const double es = rel(s.table.beta[row.k], want), el = rel(l.table.beta[row.k], want);
    worst = std::max({worst, es, el});
    p("%4d %28s %12.3e %12.3e", row.k, row.b, es, el);
  }
  double alpha = std::max(max_abs(s.table.alpha, std::vector<double>(40, 0.0), 40),
                          max_abs(l.table.alpha, std::vector<double>(40, 0.0), 40));
  p("sti: kount %d, ncap %d; lanczos: kount %d, ncap %d; max |alpha_k| %.2e", s.report.kount,
    s.report.ncap, l.report.kount, l.report.ncap, alpha);
  p("%s", "");
  p.check(worst <= 1e-11, "beta within 1e-11 of the 25-digit values");
  p.check(alpha <= 1e-10, "alpha vanishes");
}

void test7(Printer& p) {
  struct Row {
    int k;
    const char *a, *b;
  };
  const Row rows[] = {
      {0, ".5641895835477562869480795", ".8862269254527580136490837"},
      {1, ".9884253928468002854870634", ".1816901138162093284622325"},
      {6, "2.080620336400833224817622", "1.002347851011010842224538"},
      {15, "3.214270636071128227448914", "2.500927917133702669954321"},
      {26, "4.203048578872001952660277", "4.333867901229950443604430"},
      {39, "5.131532886894296519319692", "6.500356237707132938035155"},
  };
  p("exp(-t^2) on (0,inf) split at 3, 6, 9; general-purpose discretizer, n = 40");
  const auto r = fixtures::half_range_hermite(40, 1000 * kEps);
  p("%4s %28s %28s %11s %11s", "k", "alpha_k", "beta_k", "err alpha", "err beta");
  for (const auto& row : rows)
    p("%4d %28s %28s %11.3e %11.3e", row.k, row.a, row.b,
      rel(r.table.alpha[row.k], parse_real<Quad>(row.a)),
      rel(r.table.beta[row.k], parse_real<Quad>(row.b)));
  p("kount %d, ncap %d", r.report.kount, r.report.ncap);
  p("%s", "");
  p.criterion(7);
}

void test8(Printer& p) {
  // the single-precision tolerance of the original runs, for comparable counts
  const double eps = 100 * 7.105e-15;
  p("Elliptic weight by the discretized modified Chebyshev algorithm, n = 40,");
  p("Chebyshev points, tolerance %.3e", eps);
  p("%6s %6s %6s %14s", "om2", "kount", "ncap", "max err beta");
  double worst = 0;
  int kount1 = -1, ncap1 = -1;
  for (double om : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999}) {
    const auto r = fixtures::elliptic_by_mccheb(40, om, eps);
    const auto ref = reference::elliptic_table(40, Quad(om));
    const double e = max_abs(r.table.beta, ref.beta, 40);
    worst = std::max(worst, e);
    if (om == 0.1) {
      kount1 = r.report.kount;
      ncap1 = r.report.ncap;
    }
    p("%6g %6d %6d %14.3e", om, r.report.kount, r.report.ncap, e);
  }
  p("%s", "");
  p.check(worst <= 5e-11, "agreement with the modified-moment results to 10 decimals");
  p.check(kount1 == 1 && ncap1 == 81, "one iteration with ncap = 81 at om2 = .1");
}

void test9(Printer& p) {
  const int n = 100;
  const auto base = modified_chebyshev(n + 1, log_weight_moments<double>(n + 1, -0.5, false, true));
  ModificationKind k;
  k.op = Modification::MulLinear;
  k.x = 0;
  const auto c = chri(k, base.table);
  const auto direct = modified_chebyshev(n, log_weight_moments<double>(n, 0.5, false, true));
  const auto ref = reference::log_weight_table(n, Quad(0.5));
  p("t ln(1/t) t^(-1/2) from the sigma = -1/2 table by one linear modification, n = %d", n);
  p("%4s %14s %14s %14s %14s", "k", "chri err a", "chri err b", "mom err a", "mom err b");
  for (int j : {0, 12, 24, 48, 99})
    p("%4d %14.3e %14.3e %14.3e %14.3e", j, rel(c.alpha[j], ref.alpha[j]), rel(c.beta[j], ref.beta[j]),
      rel(direct.table.alpha[j], ref.alpha[j]), rel(direct.table.beta[j], ref.beta[j]));
  const double e = std::max(max_rel(c.alpha, ref.alpha, n), max_rel(c.beta, ref.beta, n));
  p("max relative error of the modified table %.3e", e);
  p("%s", "");
  p.check(e <= 1e-10, "modified table matches sigma = 1/2");
}

void test10(Printer& p) {
  p("Induced Legendre polynomials, n = 20");
  const int ms[] = {0, 2, 6, 11};
  RecurrenceTable t[4];
  for (int i = 0; i < 4; ++i) t[i] = fixtures::induced_legendre(20, ms[i]);
  p("%4s %16s %16s %16s %16s", "k", "m = 0", "m = 2", "m = 6", "m = 11");
  for (int k : {0, 1, 6, 12, 19})
    p("%4d %16.10f %16.10f %16.10f %16.10f", k, t[0].beta[k], t[1].beta[k], t[2].beta[k],
      t[3].beta[k]);
  for (int i = 0; i < 4; ++i) {
    const auto ref = reference::induced_legendre_table(20, ms[i]);
    p("m = %2d: err alpha %.3e, err beta %.3e", ms[i], max_abs(t[i].alpha, ref.alpha, 20),
      max_rel(t[i].beta, ref.beta, 20));
  }
  p("%s", "");
  p.criterion(9);
}

void test11(Printer& p) {
  const int n = 40, numax = 800;
  const double eps = 10 * kEps;
  const auto leg = classical_coeffs(ClassicalKind::legendre(), numax + 1);
  p("Division of the Legendre measure by t - x, n = %d, numax = %d", n, numax);
  p("%7s %5s %5s %11s %11s %11s %11s", "x", "nu0", "nu", "gchri err a", "gchri err b",
    "chri err a", "chri err b");
  p("%7s %11s %11s %11s %11s", "", "recon a", "recon b", "recon a", "recon b");
  for (double x : {-1.001, -1.01, -1.04, -1.07, -1.1}) {
    const auto ref = reference::legendre_division_table(n, Quad(x));
    ModificationKind div;
    div.op = Modification::DivLinear;
    div.x = x;
    ModificationKind mul;
    mul.op = Modification::MulLinear;
    mul.x = x;
    const int nu0 = nu0_estimate<double>(Nu0Family::Jacobi, 2 * n - 1, {x, 0}, eps);
    const auto g = gchri(div, n, nu0, numax, eps, leg);
    const auto c = chri(div, leg, n);
    const auto gb = chri(mul, g.table), cb = chri(mul, c);
    p("%7g %5d %5d %11.3e %11.3e %11.3e %11.3e", x, nu0, g.nu_used,
      max_abs(g.table.alpha, ref.alpha, n), max_rel(g.table.beta, ref.beta, n),
      max_abs(c.alpha, ref.alpha, n), max_rel(c.beta, ref.beta, n));
    p("%7s %11.3e %11.3e %11.3e %11.3e", "", max_abs(gb.alpha, leg.alpha, n - 1),
      max_rel(gb.beta, leg.beta, n - 1), max_abs(cb.alpha, leg.alpha, n - 1),
      max_rel(cb.beta, leg.beta, n - 1));
  }
  p("%s", "");
  p("Division by (t-x)^2 + y^2, z = x + iy on the ellipse with foci -1, 1 and semiaxis sum rho");
  p("%6s %6s %5s %11s %11s %11s %11s", "rho", "theta", "nu", "gchri err a", "gchri err b",
    "chri err a", "chri err b");
  for (double rho : {1.05, 1.1, 1.2, 1.5})
    for (double th : {M_PI / 4, M_PI / 2}) {
      const double x = (rho + 1 / rho) / 2 * std::cos(th);
      const double y = (rho - 1 / rho) / 2 * std::sin(th);
      ModificationKind div;
      div.op = Modification::DivQuadratic;
      div.x = x;
      div.y = y;
      const auto ref = reference::legendre_division_table(n, Quad(x), Quad(y));
      const int nu0 = nu0_estimate<double>(Nu0Family::Jacobi, 2 * n - 1, {x, y}, eps);
      const auto g = gchri(div, n, std::min(nu0, numax), numax, eps, leg);
      const auto c = chri(div, leg, n);
      p("%6g %6.4f %5d %11.3e %11.3e %11.3e %11.3e", rho, th, g.nu_used,
        max_abs(g.table.alpha, ref.alpha, n), max_rel(g.table.beta, ref.beta, n),
        max_abs(c.alpha, ref.alpha, n), max_rel(c.beta, ref.beta, n));
    }
  p("%s", "");
  p.criterion(8);
}

}  // namespace

int repro(int id, std::ostream& out) {
  Printer p{out};
  p("repro %d", id);
  try {
    switch (id) {
      case 1: test1(p); break;
      case 2: test2(p); break;
      case 3: test3(p); break;
      case 4: test4(p); break;
      case 5: test5(p); break;
      case 6: test6(p); break;
      case 7: test7(p); break;
      case 8: test8(p); break;
      case 9: test9(p); break;
      case 10: test10(p); break;
      case 11: test11(p); break;
      default: throw Error(ErrorKind::OutOfRange, "experiments are numbered 1..11", id);
    }
  } catch (const Error& e) {
    p.ok = false;
    p.failed.push_back(std::string("computation (") + e.what() + ")");
  }
  std::string names;
  for (const auto& f : p.failed) names += (names.empty() ? "" : ", ") + f;
  if (p.ok)
    p("repro %d: PASS", id);
  else
    p("repro %d: FAIL (%s)", id, names.c_str());
  return p.ok ? 0 : 1;
}

}  // namespace orthogen::cli
