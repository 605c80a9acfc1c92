#pragma once

// Umbrella header: monotone quantum metrics via Morozova-Chentsov functions,
// their canonical and exponential representations, metric adjusted skew
// information on density matrices, and the seeded property suites that
// certify the identities numerically.

#include "qig/axioms.hpp"
#include "qig/errors.hpp"
#include "qig/extrapolation.hpp"
#include "qig/matrix_io.hpp"
#include "qig/mc_function.hpp"
#include "qig/quadrature.hpp"
#include "qig/random.hpp"
#include "qig/report.hpp"
#include "qig/representation.hpp"
#include "qig/sampling.hpp"
#include "qig/skew.hpp"
#include "qig/states.hpp"
#include "qig/suites.hpp"
