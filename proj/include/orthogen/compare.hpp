#pragma once

// Error measures used when comparing computed tables against references.

#include <algorithm>
#include <cmath>
#include <vector>

#include "orthogen/precision.hpp"

namespace orthogen::compare {

inline double rel(double got, double want) {
  return want == 0 ? std::fabs(got) : std::fabs((got - want) / want);
}

inline double rel(double got, Quad want) {
  return want == 0 ? std::fabs(got) : double(fabsq((Quad(got) - want) / want));
}

template <class A, class B>
double max_rel(const A& got, const B& want, std::size_t count) {
  double e = 0;
  for (std::size_t k = 0; k < count; ++k) e = std::max(e, rel(got[k], want[k]));
  return e;
}

template <class A, class B>
double max_abs(const A& got, const B& want, std::size_t count) {
  double e = 0;
  for (std::size_t k = 0; k < count; ++k)
    e = std::max(e, std::fabs(double(got[k]) - double(want[k])));
  return e;
}

}  // namespace orthogen::compare
