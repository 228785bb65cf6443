#pragma once

/**
 * @file binterp.hpp
 * @brief Convenience header: the generalized binomial interpolated operator
 * L^(h,y) on sequence prefixes and linear recurrences, over exact rationals.
 */

#include "binterp/rational.hpp"
#include "binterp/polynomial.hpp"
#include "binterp/sequences.hpp"
#include "binterp/operator.hpp"
#include "binterp/fixed_points.hpp"
#include "binterp/decimation.hpp"
#include "binterp/hankel.hpp"
#include "binterp/catalog.hpp"
#include "binterp/io.hpp"
