#pragma once

#include "orthogen/precision.hpp"
#include "orthogen/core.hpp"
#include "orthogen/classical.hpp"
#include "orthogen/momentalg.hpp"
#include "orthogen/discrete.hpp"
#include "orthogen/discretize.hpp"
#include "orthogen/modify.hpp"
#include "orthogen/quadrule.hpp"
#include "orthogen/record.hpp"
