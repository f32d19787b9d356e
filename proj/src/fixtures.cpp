#include "orthogen/fixtures.hpp"

#include <map>
#include <memory>

#include "orthogen/classical.hpp"
#include "orthogen/modify.hpp"
#include "orthogen/quadrule.hpp"

namespace orthogen::fixtures {

namespace {

/// Gauss rules for one table, cached by size.
struct GaussCache {
  explicit GaussCache(RecurrenceTable base) : base(std::move(base)) {}

  const QuadratureRule& get(int N) {
    auto it = rules.find(N);
    if (it != rules.end()) return it->second;
    if (int(base.size()) < N) throw Error(ErrorKind::OutOfRange, "rule too large", N);
    return rules.emplace(N, gauss_rule(N, base)).first->second;
  }

  RecurrenceTable base;
  std::map<int, QuadratureRule> rules;
};

DiscreteMeasure as_measure(const QuadratureRule& q, double scale = 1) {
  DiscreteMeasure d;
  d.nodes = q.nodes;
  d.weights = q.weights;
  for (auto& w : d.weights) w *= scale;
  return d;
}

}  // namespace

DiscretizationResult<double> chebyshev_plus_constant(int n, double c, double eps,
                                                     Engine engine, int ncapm) {
  MeasureSpec spec;
  spec.components.push_back({-1, 1, [](double t, int) { return 1 / std::sqrt(1 - t * t); }});
  spec.components.push_back({-1, 1, [c](double, int) { return c; }});
  auto legendre = std::make_shared<GaussCache>(
      classical_coeffs(ClassicalKind::legendre(), ncapm + 1));
  DiscretizationPolicy p;
  p.eps = eps;
  p.ncapm = ncapm;
  p.idelta = 2;
  p.engine = engine;
  p.rule = [legendre, c](int N, int i, int& status) {
    status = 0;
    if (i == 1) return as_measure(legendre->get(N), c);
    const double pi = num::pi<double>();
    DiscreteMeasure d;
    for (int r = N; r >= 1; --r) {
      d.nodes.push_back(std::cos((2 * r - 1) * pi / (2 * N)));
      d.weights.push_back(pi / N);
    }
    return d;
  };
  return mcdis(n, spec, p);
}

DiscretizationResult<double> jacobi_with_endpoint_mass(int n, double a, double b,
                                                       double y, double eps,
                                                       Engine engine) {
  MeasureSpec spec;
  // the weight is folded into the Gauss-Jacobi rule below
  spec.components.push_back({-1, 1, [](double, int) { return 0.0; }});
  spec.masses.push_back({-1, y});
  DiscretizationPolicy p;
  p.eps = eps;
  p.ncapm = 4 * n + 10;
  p.engine = engine;
  auto base = classical_coeffs(ClassicalKind::jacobi(a, b), p.ncapm + 1);
  base.beta[0] = 1;
  auto jacobi = std::make_shared<GaussCache>(std::move(base));
  p.rule = [jacobi](int N, int, int& status) {
    status = 0;
    return as_measure(jacobi->get(N));
  };
  return mcdis(n, spec, p);
}

DiscretizationResult<double> logistic(int n, double eps, Engine engine, int ncapm,
                                      int idelta) {
  MeasureSpec spec;
  auto none = [](double, int) { return 0.0; };
  spec.components.push_back({-infinity<double>(), 0, none});
  spec.components.push_back({0, infinity<double>(), none});
  DiscretizationPolicy p;
  p.eps = eps;
  p.ncapm = ncapm;
  p.idelta = idelta;
  p.engine = engine;
  auto laguerre =
      std::make_shared<GaussCache>(classical_coeffs(ClassicalKind::laguerre(), ncapm + 1));
  p.rule = [laguerre](int N, int i, int& status) {
    status = 0;
    const auto& q = laguerre->get(N);
    DiscreteMeasure d;
    for (int r = 0; r < N; ++r) {
      // ascending nodes on the left half
      const int j = i == 0 ? N - 1 - r : r;
      const double x = q.nodes[j];
      const double e = 1 + std::exp(-x);
      d.nodes.push_back(i == 0 ? -x : x);
      d.weights.push_back(q.weights[j] / (e * e));
    }
    return d;
  };
  return mcdis(n, spec, p);
}

DiscretizationResult<double> half_range_hermite(int n, double eps, Engine engine,
                                                int ncapm, int idelta) {
  MeasureSpec spec;
  auto w = [](double t, int) { return std::exp(-t * t); };
  const double ends[] = {0, 3, 6, 9, infinity<double>()};
  for (int i = 0; i < 4; ++i) spec.components.push_back({ends[i], ends[i + 1], w});
  DiscretizationPolicy p;
  p.eps = eps;
  p.ncapm = ncapm;
  p.idelta = idelta;
  p.engine = engine;
  return mcdis(n, spec, p);
}

DiscretizationResult<double> elliptic_by_mccheb(int n, double omsq, double eps,
                                                int ncapm) {
  MeasureSpec spec;
  spec.components.push_back({-1, 1, [](double, int) { return 0.0; }});
  DiscretizationPolicy p;
  p.eps = eps;
  p.ncapm = ncapm;
  p.rule = [omsq](int N, int, int& status) {
    status = 0;
    const double pi = num::pi<double>();
    DiscreteMeasure d;
    for (int r = 1; r <= N; ++r) {
      const double x = std::cos((2 * r - 1) * pi / (2 * N));
      d.nodes.push_back(x);
      d.weights.push_back(pi / N / std::sqrt(1 - omsq * x * x));
    }
    return d;
  };
  auto ref = classical_coeffs(ClassicalKind::chebyshev(1), 2 * n - 1);
  return mccheb(n, spec, p, ref);
}

std::vector<double> legendre_zeros(int m) {
  return gauss_rule(m, classical_coeffs(ClassicalKind::legendre(), m)).nodes;
}

RecurrenceTable induced_legendre(int n, int m) {
  auto t = classical_coeffs(ClassicalKind::legendre(), n + m);
  if (m == 0) {
    t.alpha.resize(n);
    t.beta.resize(n);
    return t;
  }
  ModificationKind k;
  k.op = Modification::MulLinearSquaredQR;
  for (double z : legendre_zeros(m)) {
    k.x = z;
    t = chri(k, t);
  }
  return t;
}

}  // namespace orthogen::fixtures
