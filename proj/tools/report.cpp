#include "report.hpp"

#include <cstdio>

#include "orthogen/record.hpp"

namespace orthogen::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "record") return Format::Record;
  throw Error(ErrorKind::InvalidOption, "unknown format '" + name + "'");
}

namespace {

Json issue(const Warning& w, bool fatal) {
  return Json{{"kind", to_string(w.kind)}, {"index", w.index}, {"message", w.message},
              {"fatal", fatal}};
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string param_text(const Json& params) {
  std::string s;
  for (const auto& [k, v] : params.items())
    s += ' ' + k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
  return s;
}

void columns(std::ostream& out, const char* a, const char* b,
             const std::vector<double>& x, const std::vector<double>& y, bool csv) {
  char buf[128];
  if (csv) {
    out << "k," << a << ',' << b << '\n';
  } else {
    std::snprintf(buf, sizeof buf, "%5s  %25s  %25s\n", "k", a, b);
    out << buf;
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (csv)
      out << k << ',' << format17(x[k]) << ',' << format17(y[k]) << '\n';
    else {
      std::snprintf(buf, sizeof buf, "%5zu  %25s  %25s\n", k, format17(x[k]).c_str(),
                    format17(y[k]).c_str());
      out << buf;
    }
  }
}

}  // namespace

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["params"] = r.params;
  if (r.table) {
    j["alpha"] = r.table->alpha;
    j["beta"] = r.table->beta;
  }
  if (r.rule) {
    j["nodes"] = r.rule->nodes;
    j["weights"] = r.rule->weights;
  }
  Json rep{{"ncap", optional_int(r.ncap)},
           {"kount", optional_int(r.kount)},
           {"nu_used", optional_int(r.nu_used)}};
  if (r.rule) {
    rep["exactness"] = r.rule->exactness;
    rep["positive"] = r.rule->positive;
  }
  j["report"] = rep;
  Json errors = Json::array();
  for (const auto& w : r.warnings) errors.push_back(issue(w, false));
  if (r.failure) errors.push_back(issue(*r.failure, true));
  j["errors"] = errors;
  return j;
}

void write_report(const Report& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Json:
      out << to_json(r).dump(2) << '\n';
      return;
    case Format::Record:
      if (r.table) out << to_record(*r.table);
      if (r.rule) out << to_record(*r.rule);
      return;
    case Format::Csv:
      if (r.table) columns(out, "alpha", "beta", r.table->alpha, r.table->beta, true);
      if (r.rule) columns(out, "node", "weight", r.rule->nodes, r.rule->weights, true);
      return;
    case Format::Table:
      break;
  }
  out << "# " << r.command << param_text(r.params) << '\n';
  if (r.table) columns(out, "alpha", "beta", r.table->alpha, r.table->beta, false);
  if (r.rule) columns(out, "node", "weight", r.rule->nodes, r.rule->weights, false);
  if (r.ncap) out << "# ncap " << *r.ncap << '\n';
  if (r.kount) out << "# kount " << *r.kount << '\n';
  if (r.nu_used) out << "# nu " << *r.nu_used << '\n';
  if (r.rule)
    out << "# exactness " << r.rule->exactness << (r.rule->positive ? "" : "  (weights not all positive)")
        << '\n';
  for (const auto& w : r.warnings)
    out << "# warning " << to_string(w.kind) << ": " << w.message << '\n';
}

RecurrenceTable table_from_json(const Json& j) {
  RecurrenceTable t;
  t.alpha = j.at("alpha").get<std::vector<double>>();
  t.beta = j.at("beta").get<std::vector<double>>();
  return t;
}

QuadratureRule rule_from_json(const Json& j) {
  QuadratureRule q;
  q.nodes = j.at("nodes").get<std::vector<double>>();
  q.weights = j.at("weights").get<std::vector<double>>();
  q.exactness = j.at("report").at("exactness").get<int>();
  q.positive = j.at("report").at("positive").get<bool>();
  return q;
}

}  // namespace orthogen::cli
