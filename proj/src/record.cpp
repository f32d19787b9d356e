#include "orthogen/record.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace orthogen {

std::string format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

using Fields = std::map<std::string, std::vector<std::string>>;

void put(std::ostringstream& os, const std::string& name, const std::vector<double>& v) {
  os << name;
  for (double x : v) os << ' ' << format17(x);
  os << '\n';
}

std::string header(const char* type) {
  return "orthogen-record " + std::to_string(kRecordVersion) + ' ' + type + '\n';
}

Fields parse(const std::string& text, const std::string& type) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line))
    throw Error(ErrorKind::InvalidOption, "empty record");
  std::istringstream hs(line);
  std::string magic, got_type;
  int version = 0;
  hs >> magic >> version >> got_type;
  if (magic != "orthogen-record")
    throw Error(ErrorKind::InvalidOption, "not an orthogen record");
  if (version != kRecordVersion)
    throw Error(ErrorKind::InvalidOption, "unsupported record version", version);
  if (got_type != type)
    throw Error(ErrorKind::InvalidOption, "expected a " + type + " record, got " + got_type);
  Fields f;
  bool closed = false;
  while (std::getline(is, line)) {
    if (line == "end") {
      closed = true;
      break;
    }
    std::istringstream ls(line);
    std::string name, tok;
    ls >> name;
    if (name.empty()) continue;
    auto& vals = f[name];
    while (ls >> tok) vals.push_back(tok);
  }
  if (!closed) throw Error(ErrorKind::InvalidOption, "truncated record");
  return f;
}

std::vector<double> numbers(const Fields& f, const std::string& name) {
  auto it = f.find(name);
  if (it == f.end()) throw Error(ErrorKind::InvalidOption, "record lacks field " + name);
  std::vector<double> v;
  for (const auto& s : it->second) v.push_back(parse_real<double>(s));
  return v;
}

long integer(const Fields& f, const std::string& name) {
  auto v = numbers(f, name);
  if (v.size() != 1) throw Error(ErrorKind::InvalidOption, "field " + name + " is not scalar");
  return long(v[0]);
}

}  // namespace

std::string to_record(const RecurrenceTable& t) {
  std::ostringstream os;
  os << header("recurrence-table");
  os << "n " << t.size() << '\n';
  os << "indefinite " << (t.indefinite ? 1 : 0) << '\n';
  put(os, "alpha", t.alpha);
  put(os, "beta", t.beta);
  os << "end\n";
  return os.str();
}

std::string to_record(const QuadratureRule& q) {
  std::ostringstream os;
  os << header("quadrature-rule");
  os << "n " << q.size() << '\n';
  os << "exactness " << q.exactness << '\n';
  os << "positive " << (q.positive ? 1 : 0) << '\n';
  put(os, "nodes", q.nodes);
  put(os, "weights", q.weights);
  os << "end\n";
  return os.str();
}

std::string to_record(const MomentVector& m) {
  std::ostringstream os;
  os << header("moment-vector");
  os << "n " << m.values.size() << '\n';
  put(os, "values", m.values);
  if (m.reference) {
    put(os, "ref_alpha", m.reference->alpha);
    put(os, "ref_beta", m.reference->beta);
  }
  os << "end\n";
  return os.str();
}

RecurrenceTable table_from_record(const std::string& text) {
  const auto f = parse(text, "recurrence-table");
  RecurrenceTable t;
  t.alpha = numbers(f, "alpha");
  t.beta = numbers(f, "beta");
  t.indefinite = integer(f, "indefinite") != 0;
  if (long(t.alpha.size()) != integer(f, "n"))
    throw Error(ErrorKind::OutOfRange, "record length mismatch");
  validate_table(t, false);
  return t;
}

QuadratureRule rule_from_record(const std::string& text) {
  const auto f = parse(text, "quadrature-rule");
  QuadratureRule q;
  q.nodes = numbers(f, "nodes");
  q.weights = numbers(f, "weights");
  q.exactness = int(integer(f, "exactness"));
  q.positive = integer(f, "positive") != 0;
  if (long(q.nodes.size()) != integer(f, "n") || q.nodes.size() != q.weights.size())
    throw Error(ErrorKind::OutOfRange, "record length mismatch");
  return q;
}

MomentVector moments_from_record(const std::string& text) {
  const auto f = parse(text, "moment-vector");
  MomentVector m;
  m.values = numbers(f, "values");
  if (long(m.values.size()) != integer(f, "n"))
    throw Error(ErrorKind::OutOfRange, "record length mismatch");
  if (f.count("ref_alpha")) {
    RecurrenceTable r;
    r.alpha = numbers(f, "ref_alpha");
    r.beta = numbers(f, "ref_beta");
    m.reference = r;
  }
  return m;
}

}  // namespace orthogen
