#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthogen/precision.hpp"

namespace orthogen {

enum class ErrorKind {
  OutOfRange,
  Overflow,
  Underflow,
  NonConvergence,
  InvalidOption,
  SingularSystem,
};

const char* to_string(ErrorKind kind);

/// Every failure of the library surfaces as this exception. `index` carries
/// the routine-specific detail (offending coefficient index, component
/// index, or the iteration limit that was reached); -1 when meaningless.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, long index = -1);

  ErrorKind kind() const noexcept { return kind_; }
  long index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  long index_;
};

/// Non-fatal conditions (clamped overflow, flushed tiny weights).
struct Warning {
  ErrorKind kind;
  long index;
  std::string message;
};
using Warnings = std::vector<Warning>;

template <class T>
struct BasicRecurrenceTable {
  std::vector<T> alpha;
  std::vector<T> beta;
  bool indefinite = false;

  std::size_t size() const { return alpha.size(); }
};

template <class T>
struct BasicDiscreteMeasure {
  std::vector<T> nodes;
  std::vector<T> weights;
  bool indefinite = false;

  std::size_t size() const { return nodes.size(); }
};

template <class T>
struct BasicQuadratureRule {
  std::vector<T> nodes;
  std::vector<T> weights;
  int exactness = 0;
  // false for Christoffel-type rules whose weights may change sign
  bool positive = true;

  std::size_t size() const { return nodes.size(); }
};

template <class T>
struct PointMass {
  T x;
  T y;
};

enum class RuleKind { Default, Fejer };

template <class T>
struct Component {
  T left;
  T right;
  // weight(x, i) with i the 0-based component index
  std::function<T(T, int)> weight;
  RuleKind rule = RuleKind::Default;
};

template <class T>
struct BasicMeasureSpec {
  std::vector<Component<T>> components;
  std::vector<PointMass<T>> masses;
  bool indefinite = false;
};

template <class T>
struct BasicComplexSequence {
  std::vector<std::complex<T>> values;
  std::complex<T> z;
  int nu_used = 0;
};

using RecurrenceTable = BasicRecurrenceTable<double>;
using DiscreteMeasure = BasicDiscreteMeasure<double>;
using QuadratureRule = BasicQuadratureRule<double>;
using MeasureSpec = BasicMeasureSpec<double>;
using ComplexSequence = BasicComplexSequence<double>;

template <class T>
T infinity() {
  return std::numeric_limits<double>::infinity();
}

template <class T>
const BasicRecurrenceTable<T>& validate_table(const BasicRecurrenceTable<T>& t,
                                              bool positive = true);

template <class T>
const BasicDiscreteMeasure<T>& validate_measure(
    const BasicDiscreteMeasure<T>& d);

template <class T>
const BasicMeasureSpec<T>& validate_spec(const BasicMeasureSpec<T>& spec);

/// Converts between precisions (used to seed extended computations and to
/// round reference results back to binary64).
template <class To, class From>
BasicRecurrenceTable<To> convert(const BasicRecurrenceTable<From>& t) {
  BasicRecurrenceTable<To> out;
  out.indefinite = t.indefinite;
  for (auto a : t.alpha) out.alpha.push_back(static_cast<To>(a));
  for (auto b : t.beta) out.beta.push_back(static_cast<To>(b));
  return out;
}

}  // namespace orthogen
