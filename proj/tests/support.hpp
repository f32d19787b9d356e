#pragma once

#include "orthogen/compare.hpp"

namespace orthogen::test {
using namespace orthogen::compare;
}
