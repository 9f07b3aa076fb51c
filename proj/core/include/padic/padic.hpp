#pragma once

// Umbrella header for the fixed-precision QQ_p library.

#include "padic/analytic.hpp"
#include "padic/arith.hpp"
#include "padic/context.hpp"
#include "padic/convert.hpp"
#include "padic/error.hpp"
#include "padic/expr.hpp"
#include "padic/hensel.hpp"
#include "padic/number.hpp"
#include "padic/primality.hpp"
#include "padic/rational.hpp"
#include "padic/valuation.hpp"
