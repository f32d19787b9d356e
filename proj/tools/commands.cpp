#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "orthogen/fixtures.hpp"
#include "orthogen/orthogen.hpp"
#include "report.hpp"

namespace orthogen::cli {

namespace {

const double kEps = precision<double>::epsilon();

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::optional<double> eps;
  std::string format = "table";
  std::string kind = "legendre";
  double alpha = 0, beta = 0;
  double sigma = 0, om2 = 0.5, c = 1, y = 1;
  int iopt = 0;
  double x = 0, yq = 0;
  int idelta = 1, irout = 1, ncapm = 0;
  std::string example;
  bool ordinary = false;
  int points = 0;
  std::string measure;
  std::string method = "auto";
  int numax = 800;
  int m = 0;
  double end = -1, left = -1, right = 1;
  int seed = 0;
  int test_id = 0;
};

// --eps wins, then ORTHOGEN_EPS, then the command's own default
double tolerance(const Options& o, double fallback) {
  if (o.eps) return *o.eps;
  if (const char* env = std::getenv("ORTHOGEN_EPS")) {
    try {
      const double v = parse_real<double>(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("ORTHOGEN_EPS must be a positive number");
  }
  return fallback;
}

RecurrenceTable base_table(const Options& o, int size, Report& r) {
  const ClassicalFamily f = parse_family(o.kind);
  r.params["kind"] = o.kind;
  if (f == ClassicalFamily::Jacobi) {
    r.params["alpha"] = o.alpha;
    r.params["beta"] = o.beta;
  } else if (f == ClassicalFamily::GeneralizedLaguerre) {
    r.params["alpha"] = o.alpha;
  }
  return classical_coeffs<double>(f, size, o.alpha, o.beta, &r.warnings);
}

Nu0Family nu0_family(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::GeneralizedLaguerre: return Nu0Family::GenLaguerre;
    case ClassicalFamily::Hermite: return Nu0Family::Hermite;
    case ClassicalFamily::LegendreShift: return Nu0Family::Generic;
    default: return Nu0Family::Jacobi;
  }
}

// the modified table of length n, by chri or (divisions) gchri
RecurrenceTable modified_table(const Options& o, int n, Report& r) {
  if (o.iopt < 1 || o.iopt > 7) throw UsageError("--iopt must be 1..7");
  const auto base = base_table(o, std::max(o.numax, n + 1) + 1, r);
  ModificationKind k;
  k.op = Modification(o.iopt);
  k.x = o.x;
  k.y = o.yq;
  k.symmetric = std::all_of(base.alpha.begin(), base.alpha.end(), [](double a) { return a == 0; });
  r.params["iopt"] = o.iopt;
  r.params["x"] = o.x;
  if (o.iopt == 2 || o.iopt == 3 || o.iopt == 5 || o.iopt == 6) r.params["yq"] = o.yq;
  const bool division = o.iopt >= 4 && o.iopt <= 6;
  std::string method = o.method;
  if (method == "auto") method = division ? "gchri" : "chri";
  if (method != "chri" && method != "gchri") throw UsageError("--method must be chri or gchri");
  if (method == "gchri" && !division) throw UsageError("gchri handles divisions only (iopt 4-6)");
  r.params["method"] = method;
  if (method == "chri") return chri(k, base, n);

  if (k.op == Modification::DivSymQuadratic) {
    k.op = Modification::DivQuadratic;
    k.x = 0;
  }
  const double eps = tolerance(o, 10 * kEps);
  const ClassicalFamily f = parse_family(o.kind);
  std::complex<double> z(k.x, k.op == Modification::DivLinear ? 0.0 : k.y);
  if (f == ClassicalFamily::LegendreShift) z = 2.0 * z - 1.0;
  const Nu0Family fam = f == ClassicalFamily::LegendreShift ? Nu0Family::Jacobi : nu0_family(f);
  const int nu0 = std::max(nu0_estimate<double>(fam, 2 * n - 1, z, eps, o.alpha), 2 * n);
  const auto g = gchri(k, n, std::min(nu0, o.numax), o.numax, eps, base);
  r.nu_used = g.nu_used;
  return g.table;
}

DiscreteMeasure read_measure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open measure file " + path);
  DiscreteMeasure d;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a >> b)) throw UsageError("measure lines need a node and a weight");
    d.nodes.push_back(parse_real<double>(a));
    d.weights.push_back(parse_real<double>(b));
  }
  return d;
}

void take(Report& r, DiscretizationResult<double> res) {
  r.table = std::move(res.table);
  r.ncap = res.report.ncap;
  r.kount = res.report.kount;
  r.warnings.insert(r.warnings.end(), res.warnings.begin(), res.warnings.end());
}

Engine engine_of(const Options& o) {
  if (o.irout != 1 && o.irout != 2) throw UsageError("--irout must be 1 (Stieltjes) or 2 (Lanczos)");
  return o.irout == 1 ? Engine::Stieltjes : Engine::Lanczos;
}

void coeffs(const std::string& what, const Options& o, Report& r) {
  r.command = "coeffs " + what;
  r.params["n"] = o.n;
  if (what == "classical") {
    r.table = base_table(o, o.n, r);
  } else if (what == "moments") {
    r.params["example"] = o.example;
    r.params["moments"] = o.ordinary ? "ordinary" : "modified";
    MomentVector m;
    if (o.example == "3.1") {
      r.params["om2"] = o.om2;
      m = o.ordinary ? elliptic_ordinary_moments<double>(o.n, o.om2)
                     : elliptic_modified_moments<double>(o.n, o.om2);
    } else if (o.example == "3.2") {
      r.params["sigma"] = o.sigma;
      const bool integer = o.sigma >= 0 && std::floor(o.sigma) == o.sigma;
      m = log_weight_moments<double>(o.n, o.sigma, integer, !o.ordinary);
    } else {
      throw UsageError("--example must be 3.1 or 3.2");
    }
    r.table = modified_chebyshev(o.n, m).table;
  } else if (what == "stieltjes" || what == "lanczos") {
    DiscreteMeasure d;
    if (!o.measure.empty()) {
      d = read_measure(o.measure);
      r.params["measure"] = o.measure;
    } else if (o.points > 0) {
      d = discrete_chebyshev_measure<double>(o.points);
      r.params["points"] = o.points;
    } else {
      throw UsageError("give --points N (equally spaced measure) or --measure FILE");
    }
    r.table = what == "stieltjes" ? stieltjes(o.n, d) : lanczos_reduce(o.n, d);
  } else if (what == "discretize") {
    r.params["example"] = o.example;
    r.params["irout"] = o.irout;
    const Engine e = engine_of(o);
    const bool light = o.example == "4.4" || o.example == "4.5";
    const double eps = tolerance(o, (light ? 1000 : 5000) * kEps);
    r.params["eps"] = eps;
    if (o.example == "4.2") {
      r.params["c"] = o.c;
      take(r, fixtures::chebyshev_plus_constant(o.n, o.c, eps, e, o.ncapm > 0 ? o.ncapm : 81));
    } else if (o.example == "4.3") {
      r.params["alpha"] = o.alpha;
      r.params["beta"] = o.beta;
      r.params["y"] = o.y;
      take(r, fixtures::jacobi_with_endpoint_mass(o.n, o.alpha, o.beta, o.y, eps, e));
    } else if (o.example == "4.4") {
      r.params["idelta"] = o.idelta;
      take(r, fixtures::logistic(o.n, eps, e, o.ncapm > 0 ? o.ncapm : 500, o.idelta));
    } else if (o.example == "4.5") {
      r.params["idelta"] = o.idelta;
      take(r, fixtures::half_range_hermite(o.n, eps, e, o.ncapm > 0 ? o.ncapm : 500, o.idelta));
    } else {
      throw UsageError("--example must be one of 4.2, 4.3, 4.4, 4.5");
    }
  } else if (what == "mccheb") {
    r.params["om2"] = o.om2;
    r.params["eps"] = tolerance(o, 100 * kEps);
    take(r, fixtures::elliptic_by_mccheb(o.n, o.om2, tolerance(o, 100 * kEps),
                                         o.ncapm > 0 ? o.ncapm : 1000));
  } else if (what == "modify") {
    r.table = modified_table(o, o.n, r);
  } else if (what == "induced") {
    r.params["m"] = o.m;
    if (o.m < 0) throw UsageError("--m must be nonnegative");
    r.table = fixtures::induced_legendre(o.n, o.m);
  }
}

void quad(const std::string& what, const Options& o, Report& r) {
  r.command = "quad " + what;
  r.params["n"] = o.n;
  const int need = o.n + 2;
  const RecurrenceTable t = o.iopt ? modified_table(o, need, r) : base_table(o, need, r);
  const double eps = o.eps ? *o.eps : 0.0;
  if (what == "gauss") {
    r.rule = gauss_rule(o.n, t, eps);
  } else if (what == "radau") {
    r.params["end"] = o.end;
    r.rule = radau_rule(o.n, t, o.end, eps);
  } else {
    r.params["left"] = o.left;
    r.params["right"] = o.right;
    r.rule = lobatto_rule(o.n, t, o.left, o.right, eps);
  }
}

void common(CLI::App* s, Options& o, bool needs_n = true) {
  auto* n = s->add_option("--n", o.n, "number of coefficients (or Gauss nodes)");
  if (needs_n) n->required()->check(CLI::PositiveNumber);
  s->add_option("--eps", o.eps, "error tolerance (default per command; ORTHOGEN_EPS overrides)");
  s->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json", "record"}));
  s->add_option("--seed", o.seed, "accepted for compatibility; every run is deterministic");
}

void family(CLI::App* s, Options& o) {
  s->add_option("--kind", o.kind, "classical family")
      ->check(CLI::IsMember({"legendre", "shifted-legendre", "chebyshev1", "chebyshev2",
                             "chebyshev3", "chebyshev4", "jacobi", "laguerre", "hermite"}));
  s->add_option("--alpha", o.alpha, "Jacobi/Laguerre parameter alpha");
  s->add_option("--beta", o.beta, "Jacobi parameter beta");
}

void modification(CLI::App* s, Options& o) {
  s->add_option("--iopt", o.iopt, "modification 1..7 (multiply/divide by linear or quadratic factors)");
  s->add_option("--x", o.x, "x of the factor t-x or (t-x)^2+y^2");
  s->add_option("--yq", o.yq, "y of the quadratic factor");
  s->add_option("--method", o.method, "chri, gchri or auto");
  s->add_option("--numax", o.numax, "length of the base table used for divisions");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recurrence coefficients of orthogonal polynomials and Gauss-type quadrature"};
  app.name("orthogen");
  app.require_subcommand(1);
  Options o;
  std::string leaf;

  auto* co = app.add_subcommand("coeffs", "recurrence coefficients");
  co->require_subcommand(1);
  auto* classical = co->add_subcommand("classical", "classical weight functions");
  common(classical, o);
  family(classical, o);
  auto* moments = co->add_subcommand("moments", "modified Chebyshev algorithm on a moment example");
  common(moments, o);
  moments->add_option("--example", o.example, "3.1 (elliptic weight) or 3.2 (t^sigma ln 1/t)")->required();
  moments->add_option("--om2", o.om2, "omega^2 of the elliptic weight");
  moments->add_option("--sigma", o.sigma, "exponent of the log weight");
  moments->add_flag("--ordinary", o.ordinary, "use ordinary instead of modified moments");
  for (const char* name : {"stieltjes", "lanczos"}) {
    auto* s = co->add_subcommand(name, "coefficients of a discrete measure");
    common(s, o);
    s->add_option("--points", o.points, "N-point equally spaced measure on [-1,1]");
    s->add_option("--measure", o.measure, "file of 'node weight' lines");
  }
  auto* disc = co->add_subcommand("discretize", "multiple-component discretization examples");
  common(disc, o);
  disc->add_option("--example", o.example, "4.2, 4.3, 4.4 or 4.5")->required();
  disc->add_option("--c", o.c, "constant added to the Chebyshev weight (4.2)");
  disc->add_option("--alpha", o.alpha, "Jacobi alpha (4.3)");
  disc->add_option("--beta", o.beta, "Jacobi beta (4.3)");
  disc->add_option("--y", o.y, "mass at t=-1 (4.3)");
  disc->add_option("--irout", o.irout, "1 Stieltjes, 2 Lanczos");
  disc->add_option("--idelta", o.idelta, "discretization increment 1 or 2 (4.4, 4.5)");
  disc->add_option("--ncapm", o.ncapm, "largest discretization size");
  auto* mc = co->add_subcommand("mccheb", "discretized modified Chebyshev, elliptic weight");
  common(mc, o);
  mc->add_option("--om2", o.om2, "omega^2");
  mc->add_option("--ncapm", o.ncapm, "largest discretization size");
  auto* mod = co->add_subcommand("modify", "modified classical measure");
  common(mod, o);
  family(mod, o);
  modification(mod, o);
  mod->get_option("--iopt")->required();
  auto* ind = co->add_subcommand("induced", "induced Legendre polynomials");
  common(ind, o);
  ind->add_option("--m", o.m, "degree of the inducing polynomial")->required();

  auto* qu = app.add_subcommand("quad", "Gauss-type quadrature rules");
  qu->require_subcommand(1);
  auto* gauss = qu->add_subcommand("gauss", "n-point Gauss rule");
  auto* radau = qu->add_subcommand("radau", "(n+1)-point Gauss-Radau rule");
  auto* lobatto = qu->add_subcommand("lobatto", "(n+2)-point Gauss-Lobatto rule");
  for (auto* s : {gauss, radau, lobatto}) {
    common(s, o);
    family(s, o);
    modification(s, o);
  }
  radau->add_option("--end", o.end, "prescribed node");
  lobatto->add_option("--left", o.left, "left prescribed node");
  lobatto->add_option("--right", o.right, "right prescribed node");

  auto* rep = app.add_subcommand("repro", "regenerate one of the numerical experiments 1..11");
  rep->add_option("id", o.test_id, "experiment number")->required()->check(CLI::Range(1, 11));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (rep->parsed()) return repro(o.test_id, out);

  Report r;
  Format format = Format::Table;
  try {
    format = parse_format(o.format);
    bool done = false;
    for (auto* s : co->get_subcommands())
      if (s->parsed()) {
        coeffs(s->get_name(), o, r);
        done = true;
      }
    for (auto* s : qu->get_subcommands())
      if (s->parsed() && !done) quad(s->get_name(), o, r);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    r.table.reset();
    r.rule.reset();
    r.failure = Warning{e.kind(), e.index(), e.what()};
    if (format == Format::Json) write_report(r, format, out);
    err << "error: " << e.what() << '\n';
    return 1;
  }
  write_report(r, format, out);
  return 0;
}

}  // namespace orthogen::cli
