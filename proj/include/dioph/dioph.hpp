#pragma once

// Umbrella header: exact reduction of X^3+Y^3+Z^3+a*U^k = sum a_i*U_i^t_i
// (k = 3, 4) to elliptic curves, rational-point manipulation, mapping points
// back to rational and integer solutions, and the embedded regression corpus.

#include "dioph/canonical.hpp"
#include "dioph/corpus.hpp"
#include "dioph/errors.hpp"
#include "dioph/factor.hpp"
#include "dioph/integerize.hpp"
#include "dioph/quartic.hpp"
#include "dioph/rational.hpp"
#include "dioph/reduction.hpp"
#include "dioph/serialize.hpp"
#include "dioph/store.hpp"
#include "dioph/weierstrass.hpp"
