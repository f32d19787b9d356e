#include "doctest.h"
#include "orthogen/core.hpp"
#include "orthogen/record.hpp"

using namespace orthogen;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::OutOfRange;
}

}  // namespace

TEST_CASE("validate_table accepts and rejects") {
  RecurrenceTable ok{{0}, {2}};
  CHECK_NOTHROW(validate_table(ok));
  RecurrenceTable neg{{0, 0}, {2, -1}};
  CHECK(kind_of([&] { validate_table(neg, true); }) == ErrorKind::InvalidOption);
  CHECK_NOTHROW(validate_table(neg, false));
  RecurrenceTable mismatch{{0}, {1, 2}};
  CHECK(kind_of([&] { validate_table(mismatch); }) == ErrorKind::OutOfRange);
  RecurrenceTable inf{{0}, {INFINITY}};
  CHECK(kind_of([&] { validate_table(inf); }) == ErrorKind::Overflow);
  RecurrenceTable indef{{0, 0}, {2, -1}, true};
  CHECK_NOTHROW(validate_table(indef));
}

TEST_CASE("error carries kind and index") {
  Error e(ErrorKind::Underflow, "x", 7);
  CHECK(e.kind() == ErrorKind::Underflow);
  CHECK(e.index() == 7);
  CHECK(std::string(to_string(ErrorKind::SingularSystem)) == "SingularSystem");
}

TEST_CASE("MeasureSpec validation") {
  MeasureSpec s;
  auto w = [](double, int) { return 1.0; };
  s.components.push_back({0, 1, w});
  CHECK_NOTHROW(validate_spec(s));
  s.components.push_back({-infinity<double>(), 0, w});
  CHECK(kind_of([&] { validate_spec(s); }) == ErrorKind::InvalidOption);

  MeasureSpec m;
  m.masses = {{0.5, 1}, {0.5, 2}};
  CHECK(kind_of([&] { validate_spec(m); }) == ErrorKind::InvalidOption);
  m.masses = {{0.5, -1}};
  CHECK(kind_of([&] { validate_spec(m); }) == ErrorKind::InvalidOption);
  m.indefinite = true;
  CHECK_NOTHROW(validate_spec(m));
}

TEST_CASE("records round-trip bit for bit") {
  RecurrenceTable t{{0.1, -1.0 / 3, 1e-300}, {2, std::nextafter(1.0, 2.0), 0.25}};
  const auto back = table_from_record(to_record(t));
  CHECK(back.alpha == t.alpha);
  CHECK(back.beta == t.beta);

  QuadratureRule q;
  q.nodes = {-0.5773502691896257, 0.5773502691896257};
  q.weights = {1, 1};
  q.exactness = 3;
  const auto qb = rule_from_record(to_record(q));
  CHECK(qb.nodes == q.nodes);
  CHECK(qb.weights == q.weights);
  CHECK(qb.exactness == 3);

  MomentVector m;
  m.values = {M_PI, 0, -M_PI / 8, 0};
  m.reference = RecurrenceTable{{0, 0, 0}, {0, 0.5, 0.25}};
  const auto mb = moments_from_record(to_record(m));
  CHECK(mb.values == m.values);
  REQUIRE(mb.reference);
  CHECK(mb.reference->beta == m.reference->beta);
}

TEST_CASE("records reject foreign or damaged input") {
  RecurrenceTable t{{0}, {2}};
  auto text = to_record(t);
  CHECK(kind_of([&] { rule_from_record(text); }) == ErrorKind::InvalidOption);
  CHECK(kind_of([&] { table_from_record(text.substr(0, text.size() - 4)); }) ==
        ErrorKind::InvalidOption);
  auto bumped = text;
  bumped.replace(bumped.find(" 1 "), 3, " 9 ");
  CHECK(kind_of([&] { table_from_record(bumped); }) == ErrorKind::InvalidOption);
}
