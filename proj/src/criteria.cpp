#include "orthogen/criteria.hpp"

#include <cstdio>

#include "orthogen/compare.hpp"
#include "orthogen/fixtures.hpp"
#include "orthogen/orthogen.hpp"
#include "orthogen/reference.hpp"

namespace orthogen::criteria {

using compare::max_abs;
using compare::max_rel;
using compare::rel;

void Outcome::require(bool ok, const std::string& what) {
  if (!ok) pass = false;
  if (!detail.empty()) detail += "; ";
  detail += what + (ok ? "" : " [failed]");
}

void Outcome::require_timing(bool ok, const std::string& what) {
  if (!ok) pass = false;
  if (!timing.empty()) timing += "; ";
  timing += what + (ok ? "" : " [failed]");
}

std::string Outcome::summary() const {
  if (timing.empty()) return detail;
  return detail.empty() ? timing : detail + "; " + timing;
}

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// elliptic weight, modified moments against the extended-precision table
Outcome elliptic_modified() {
  Outcome o;
  double worst = 0, runtime = 0;
  for (double om : {0.1, 0.5, 0.9, 0.99}) {
    const auto t0 = Clock::now();
    const auto m = elliptic_modified_moments<double>(80, om);
    const auto r = modified_chebyshev(80, m);
    runtime += seconds_since(t0);
    const auto ref = reference::elliptic_table(80, Quad(om));
    worst = std::max(worst, max_rel(r.table.beta, ref.beta, 80));
  }
  o.require(worst <= 5e-12, "max rel beta err " + fmt("%.3e", worst) + " <= 5e-12");
  o.require_timing(runtime < 1.0, "runtime " + fmt("%.3f", runtime) + " s < 1 s");
  return o;
}

// relative beta errors of the ordinary-moment algorithm, a breakdown
// counting as total loss from its index on
std::vector<double> ordinary_errors(const MomentVector& m, const std::vector<Quad>& want,
                                    int n) {
  std::vector<double> err(n, INFINITY);
  for (int k = n; k >= 1; --k) {
    try {
      const auto r = modified_chebyshev(k, m);
      for (int j = 0; j < k; ++j) err[j] = rel(r.table.beta[j], want[j]);
      break;
    } catch (const Error&) {
    }
  }
  return err;
}

double max_through(const std::vector<double>& e, int k) {
  double w = 0;
  for (int j = 0; j <= k && j < int(e.size()); ++j) w = std::max(w, e[j]);
  return w;
}

Outcome ordinary_instability() {
  Outcome o;
  {
    const int n = 20;
    const auto ref = reference::elliptic_table(n, Quad(0.5));
    const auto e = ordinary_errors(elliptic_ordinary_moments<double>(n, 0.5), ref.beta, n);
    o.require(max_through(e, 13) >= 1e-3,
              "elliptic err by k=13 " + fmt("%.3e", max_through(e, 13)) + " >= 1e-3");
    o.require(max_through(e, 19) >= 1e-1,
              "elliptic err by k=19 " + fmt("%.3e", max_through(e, 19)) + " >= 1e-1");
  }
  {
    const int n = 12;
    const auto ref = reference::log_weight_table(n, Quad(0));
    const auto e = ordinary_errors(log_weight_moments<double>(n, 0, true, false), ref.beta, n);
    o.require(max_through(e, 11) >= 1e-1,
              "log weight err by k=11 " + fmt("%.3e", max_through(e, 11)) + " >= 1e-1");
  }
  return o;
}

Outcome log_weight_spot_values() {
  Outcome o;
  const auto a = modified_chebyshev(100, log_weight_moments<double>(100, 0, true, true));
  const auto b = modified_chebyshev(100, log_weight_moments<double>(100, 0.5, false, true));
  const double ea = std::fabs(a.table.alpha[0] - 0.25), eb = std::fabs(a.table.beta[0] - 1);
  const double ec = std::fabs(b.table.beta[0] - 4.0 / 9.0);
  o.require(ea <= 1e-14 && eb <= 1e-14,
            "sigma=0 (a0,b0) errs " + fmt("%.1e", ea) + "," + fmt("%.1e", eb) + " <= 1e-14");
  o.require(ec <= 1e-14, "sigma=.5 b0 err " + fmt("%.1e", ec) + " <= 1e-14");
  return o;
}

Outcome discrete_chebyshev() {
  Outcome o;
  for (int N : {40, 80, 160}) {
    const auto d = discrete_chebyshev_measure<double>(N);
    const auto want = discrete_chebyshev_reference<double>(N);
    const auto t = lanczos_reduce(N, d);
    const double ea = max_abs(t.alpha, want.alpha, N);
    const double eb = max_rel(t.beta, want.beta, N);
    o.require(ea <= 5e-11 && eb <= 5e-10, "N=" + std::to_string(N) + " lanczos alpha " +
                                              fmt("%.2e", ea) + " beta " + fmt("%.2e", eb));
  }
  const auto d = discrete_chebyshev_measure<double>(40);
  const auto want = discrete_chebyshev_reference<double>(40);
  double es = 0;
  try {
    const auto t = stieltjes(40, d);
    es = rel(t.beta[39], want.beta[39]);
  } catch (const Error&) {
    es = INFINITY;
  }
  o.require(es > 1e-6, "stieltjes N=40 beta_39 err " + fmt("%.2e", es) + " > 1e-6");
  return o;
}

Outcome chebyshev_plus_constant() {
  Outcome o;
  const double eps = 5000 * precision<double>::epsilon();
  const double pi = num::pi<double>();
  for (double c : {1.0, 10.0, 100.0}) {
    const auto r = fixtures::chebyshev_plus_constant(80, c, eps);
    const double e0 = rel(r.table.beta[0], pi + 2 * c);
    o.require(r.report.kount == 1 && e0 <= 1e-12,
              "c=" + fmt("%g", c) + " kount " + std::to_string(r.report.kount) +
                  " beta0 err " + fmt("%.1e", e0));
    if (c == 1) {
      const double e = std::fabs(r.table.beta[79] - 0.2500001724);
      o.require(e <= 1e-9, "beta79(w^1) err " + fmt("%.1e", e) + " <= 1e-9");
    }
  }
  return o;
}

Outcome jacobi_endpoint_mass() {
  Outcome o;
  const double eps = 5000 * precision<double>::epsilon();
  double worst = 0;
  int bad_kount = 0;
  for (int ia = -4; ia <= 5; ++ia)
    for (int ib = -4; ib <= 5; ++ib)
      for (double y : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double a = 0.2 * ia, b = 0.2 * ib;
        const auto r = fixtures::jacobi_with_endpoint_mass(40, a, b, y, eps);
        const auto want = jacobi_point_mass_reference<Quad>(40, a, b, y);
        worst = std::max(worst, max_rel(r.table.beta, want.beta, 40));
        if (r.report.kount != 1) ++bad_kount;
      }
  o.require(worst <= 1e-10, "max rel beta err " + fmt("%.2e", worst) + " <= 1e-10");
  o.require(bad_kount == 0, std::to_string(bad_kount) + " cells with kount != 1");
  return o;
}

Outcome half_range_hermite() {
  Outcome o;
  const auto r = fixtures::half_range_hermite(40, 1000 * precision<double>::epsilon());
  const double ea = rel(r.table.alpha[0], 0.5641895835477562869);
  const double eb = rel(r.table.beta[0], 0.8862269254527580136);
  o.require(ea <= 1e-11 && eb <= 1e-11,
            "(a0,b0) rel errs " + fmt("%.1e", ea) + "," + fmt("%.1e", eb) + " <= 1e-11");
  // tabulated 25-digit values
  struct Row {
    int k;
    const char* a;
    const char* b;
  };
  const Row rows[] = {
      {0, ".5641895835477562869480795", ".8862269254527580136490837"},
      {1, ".9884253928468002854870634", ".1816901138162093284622325"},
      {6, "2.080620336400833224817622", "1.002347851011010842224538"},
      {15, "3.214270636071128227448914", "2.500927917133702669954321"},
      {26, "4.203048578872001952660277", "4.333867901229950443604430"},
      {39, "5.131532886894296519319692", "6.500356237707132938035155"},
  };
  const auto q = reference::half_range_hermite_table(40);
  double worst = 0;
  for (const auto& row : rows) {
    worst = std::max(worst, double(fabsq((q.alpha[row.k] - parse_real<Quad>(row.a)) /
                                         parse_real<Quad>(row.a))));
    worst = std::max(worst, double(fabsq((q.beta[row.k] - parse_real<Quad>(row.b)) /
                                         parse_real<Quad>(row.b))));
  }
  o.require(worst <= 1e-24, "extended table vs 25-digit values " + fmt("%.1e", worst) +
                                " <= 1e-24");
  return o;
}

RecurrenceTable divide_by_gchri(const RecurrenceTable& base, double x, int n) {
  ModificationKind k;
  k.op = Modification::DivLinear;
  k.x = x;
  const double eps = 10 * precision<double>::epsilon();
  const int nu0 = nu0_estimate<double>(Nu0Family::Jacobi, 2 * n - 1, {x, 0}, eps);
  return gchri(k, n, nu0, int(base.size()), eps, base).table;
}

Outcome modification_round_trips() {
  Outcome o;
  const int n = 40, numax = 800;
  const auto leg = classical_coeffs(ClassicalKind::legendre(), numax + 1);
  RecurrenceTable leg_n = leg;
  leg_n.alpha.resize(n);
  leg_n.beta.resize(n);
  double recon = 0, chri_err_11 = 0, chri_alpha_11 = 0, gchri_err = 0, chri_chri = 0;
  for (double x : {-1.001, -1.01, -1.1}) {
    const auto ref = reference::legendre_division_table(n + 1, Quad(x));
    ModificationKind mul;
    mul.op = Modification::MulLinear;
    mul.x = x;

    // chri o gchri: divide, then multiply back
    const auto g = divide_by_gchri(leg, x, n + 1);
    gchri_err = std::max(gchri_err, max_rel(g.beta, ref.beta, n + 1));
    const auto back = chri(mul, g);
    recon = std::max(recon, std::max(max_abs(back.alpha, leg_n.alpha, n),
                                     max_rel(back.beta, leg_n.beta, n)));

    // gchri o chri: multiply, then divide back
    const auto m = chri(mul, leg);
    const auto undo = divide_by_gchri(m, x, n);
    recon = std::max(recon, std::max(max_abs(undo.alpha, leg_n.alpha, n),
                                     max_rel(undo.beta, leg_n.beta, n)));

    // dividing by chri itself, then multiplying back
    ModificationKind div;
    div.op = Modification::DivLinear;
    div.x = x;
    const auto c = chri(div, leg, n + 1);
    const auto cb = chri(mul, c);
    chri_chri = std::max(chri_chri, std::max(max_abs(cb.alpha, leg_n.alpha, n),
                                             max_rel(cb.beta, leg_n.beta, n)));
    if (x == -1.1) {
      chri_alpha_11 = max_abs(c.alpha, ref.alpha, n);
      chri_err_11 = max_rel(c.beta, ref.beta, n);
    }
  }
  o.require(recon <= 1e-12, "gchri/chri round trips " + fmt("%.2e", recon) + " <= 1e-12");
  o.require(chri_chri <= 1e-12,
            "chri divide/multiply round trip " + fmt("%.2e", chri_chri) + " <= 1e-12");
  o.require(gchri_err <= 1e-12, "gchri err " + fmt("%.2e", gchri_err) + " <= 1e-12");
  o.require(std::max(chri_alpha_11, chri_err_11) > 1e-1,
            "chri err at x=-1.1 alpha " + fmt("%.2e", chri_alpha_11) + " beta " +
                fmt("%.2e", chri_err_11) + " > 0.1");
  return o;
}

Outcome induced_legendre() {
  Outcome o;
  const auto t2 = fixtures::induced_legendre(20, 2);
  const double e0 = std::fabs(t2.beta[0] - 8.0 / 45.0);
  const double e1 = std::fabs(t2.beta[1] - 0.5238095238);
  o.require(e0 <= 1e-9 && e1 <= 1e-9,
            "m=2 beta0,beta1 errs " + fmt("%.1e", e0) + "," + fmt("%.1e", e1));
  double worst = 0;
  for (int m = 0; m <= 11; ++m) {
    const auto t = fixtures::induced_legendre(20, m);
    const auto ref = reference::induced_legendre_table(20, m);
    worst = std::max(worst, max_rel(t.beta, ref.beta, 20));
  }
  o.require(worst <= 1e-10, "m<=11 max rel beta err " + fmt("%.2e", worst) + " <= 1e-10");
  return o;
}

Outcome quadrature_exactness(Clock::time_point start) {
  Outcome o;
  struct Fixture {
    const char* name;
    ClassicalFamily family;
    double left, right;  // NaN: no natural endpoint
  };
  const Fixture fx[] = {
      {"legendre", ClassicalFamily::LegendreSym, -1, 1},
      {"chebyshev1", ClassicalFamily::Chebyshev1, -1, 1},
      {"laguerre", ClassicalFamily::GeneralizedLaguerre, 0, NAN},
      {"hermite", ClassicalFamily::Hermite, NAN, NAN},
  };
  const double eps = precision<double>::epsilon();
  double moment_err = 0, end_err = 0, sum_err = 0, off_support_err = 0;
  auto check = [&](const QuadratureRule& q, ClassicalFamily f, int degree, double b0) {
    double worst = 0;
    for (int j = 0; j <= degree; ++j) {
      const Quad want = reference::power_moment(f, j);
      Quad got = 0;
      for (std::size_t k = 0; k < q.size(); ++k)
        got += Quad(q.weights[k]) * powq(Quad(q.nodes[k]), j);
      const double scale = std::max(1.0, double(fabsq(want)));
      worst = std::max(worst, double(fabsq(got - want)) / scale);
    }
    Quad s = 0;
    for (double w : q.weights) s += w;
    sum_err = std::max(sum_err, double(fabsq((s - b0) / b0)) / eps);
    return worst;
  };
  auto has = [](const QuadratureRule& q, double x) {
    double d = INFINITY;
    for (double t : q.nodes) d = std::min(d, std::fabs(t - x));
    return d / std::max(1.0, std::fabs(x));
  };
  for (const auto& f : fx) {
    const auto t = classical_coeffs<double>(f.family, 24);
    const bool finl = !std::isnan(f.left), finr = !std::isnan(f.right);
    for (int n = 1; n <= 20; ++n) {
      moment_err = std::max(moment_err, check(gauss_rule(n, t), f.family, 2 * n - 1, t.beta[0]));
      if (finl) {
        const auto r = radau_rule(n, t, f.left);
        moment_err = std::max(moment_err, check(r, f.family, 2 * n, t.beta[0]));
        end_err = std::max(end_err, has(r, f.left));
      }
      if (finr) {
        const auto r = radau_rule(n, t, f.right);
        moment_err = std::max(moment_err, check(r, f.family, 2 * n, t.beta[0]));
        end_err = std::max(end_err, has(r, f.right));
      }
      if (finl && finr) {
        const auto l = lobatto_rule(n, t, f.left, f.right);
        moment_err = std::max(moment_err, check(l, f.family, 2 * n + 1, t.beta[0]));
        end_err = std::max(end_err, std::max(has(l, f.left), has(l, f.right)));
      }
      // Off the support boundary: ends just beyond the extreme zeros of
      // pi_{n+1}. Reported only; zero odd moments of an asymmetric rule are
      // sums of terms far larger than one.
      const auto z = gauss_rule(n + 1, t).nodes;
      const double xl = finl ? f.left : z.front() - 1;
      const double xr = finr ? f.right : z.back() + 1;
      if (!finl)
        off_support_err =
            std::max(off_support_err, check(radau_rule(n, t, xl), f.family, 2 * n, t.beta[0]));
      if (!finl || !finr)
        off_support_err = std::max(
            off_support_err, check(lobatto_rule(n, t, xl, xr), f.family, 2 * n + 1, t.beta[0]));
    }
  }
  o.require(moment_err <= 1e-12, "moment err " + fmt("%.2e", moment_err) + " <= 1e-12");
  o.require(end_err <= 1e-13, "endpoint err " + fmt("%.2e", end_err) + " <= 1e-13");
  o.require(sum_err <= 8, "weight sum err " + fmt("%.2f", sum_err) + " eps <= 8 eps");
  o.detail += "; info: interior-endpoint rules moment err " + fmt("%.2e", off_support_err);
  const double total = seconds_since(start);
  o.require_timing(total < 60, "suite runtime " + fmt("%.1f", total) + " s < 60 s");
  return o;
}

}  // namespace

const std::vector<Criterion>& all() {
  static const std::vector<Criterion> list = {
      {1, "modified moments, elliptic weight", [](Clock::time_point) { return elliptic_modified(); }},
      {2, "ordinary moments are unstable", [](Clock::time_point) { return ordinary_instability(); }},
      {3, "log weight spot values", [](Clock::time_point) { return log_weight_spot_values(); }},
      {4, "discrete Chebyshev by Lanczos and Stieltjes", [](Clock::time_point) { return discrete_chebyshev(); }},
      {5, "Chebyshev weight plus a constant", [](Clock::time_point) { return chebyshev_plus_constant(); }},
      {6, "Jacobi weight with an endpoint mass", [](Clock::time_point) { return jacobi_endpoint_mass(); }},
      {7, "half-range Hermite", [](Clock::time_point) { return half_range_hermite(); }},
      {8, "modification round trips", [](Clock::time_point) { return modification_round_trips(); }},
      {9, "induced Legendre polynomials", [](Clock::time_point) { return induced_legendre(); }},
      {10, "quadrature exactness", quadrature_exactness},
  };
  return list;
}

Outcome run(const Criterion& c, Clock::time_point start) {
  try {
    return c.check(start);
  } catch (const std::exception& e) {
    Outcome o;
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
    return o;
  }
}

}  // namespace orthogen::criteria
