#include "orthogen/core.hpp"

#include <algorithm>
#include <string>

namespace orthogen {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Underflow: return "Underflow";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::InvalidOption: return "InvalidOption";
    case ErrorKind::SingularSystem: return "SingularSystem";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what, long index)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      index_(index) {}

template <class T>
const BasicRecurrenceTable<T>& validate_table(const BasicRecurrenceTable<T>& t,
                                              bool positive) {
  if (t.alpha.size() != t.beta.size())
    throw Error(ErrorKind::OutOfRange, "alpha and beta differ in length");
  if (t.alpha.empty()) throw Error(ErrorKind::OutOfRange, "empty table");
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!num::isfinite(t.alpha[k]) || !num::isfinite(t.beta[k]))
      throw Error(ErrorKind::Overflow, "non-finite coefficient", long(k));
    if (positive && !t.indefinite && !(t.beta[k] > T(0)))
      throw Error(ErrorKind::InvalidOption,
                  "beta_" + std::to_string(k) + " not positive", long(k));
  }
  return t;
}

template <class T>
const BasicDiscreteMeasure<T>& validate_measure(
    const BasicDiscreteMeasure<T>& d) {
  if (d.nodes.size() != d.weights.size())
    throw Error(ErrorKind::OutOfRange, "nodes and weights differ in length");
  if (d.nodes.empty()) throw Error(ErrorKind::OutOfRange, "empty measure");
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (!num::isfinite(d.nodes[k]) || !num::isfinite(d.weights[k]))
      throw Error(ErrorKind::Overflow, "non-finite node or weight", long(k));
    if (!d.indefinite && d.weights[k] < T(0))
      throw Error(ErrorKind::InvalidOption, "negative weight", long(k));
  }
  return d;
}

template <class T>
const BasicMeasureSpec<T>& validate_spec(const BasicMeasureSpec<T>& spec) {
  const auto& c = spec.components;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(c[i].left < c[i].right))
      throw Error(ErrorKind::InvalidOption, "empty component interval", long(i));
    if (!num::isfinite(c[i].left) && i != 0)
      throw Error(ErrorKind::InvalidOption,
                  "only the first component may extend to -inf", long(i));
    if (!num::isfinite(c[i].right) && i + 1 != c.size())
      throw Error(ErrorKind::InvalidOption,
                  "only the last component may extend to +inf", long(i));
    if (!c[i].weight)
      throw Error(ErrorKind::InvalidOption, "missing weight evaluator", long(i));
  }
  const auto& m = spec.masses;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!num::isfinite(m[j].x) || !num::isfinite(m[j].y))
      throw Error(ErrorKind::Overflow, "non-finite point mass", long(j));
    // a zero jump is harmless and lets callers toggle masses off
    if (!spec.indefinite && m[j].y < T(0))
      throw Error(ErrorKind::InvalidOption, "negative point mass", long(j));
    for (std::size_t i = 0; i < j; ++i)
      if (m[i].x == m[j].x)
        throw Error(ErrorKind::InvalidOption, "duplicate mass abscissa", long(j));
  }
  return spec;
}

#define ORTHOGEN_INSTANTIATE(T)                                             \
  template const BasicRecurrenceTable<T>& validate_table(                   \
      const BasicRecurrenceTable<T>&, bool);                                \
  template const BasicDiscreteMeasure<T>& validate_measure(                 \
      const BasicDiscreteMeasure<T>&);                                      \
  template const BasicMeasureSpec<T>& validate_spec(const BasicMeasureSpec<T>&);

ORTHOGEN_INSTANTIATE(double)
ORTHOGEN_INSTANTIATE(Quad)

}  // namespace orthogen
