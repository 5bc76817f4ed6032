#ifndef FPTLAB_FPTLAB_HPP
#define FPTLAB_FPTLAB_HPP

#include "fptlab/digits.hpp"
#include "fptlab/ideal.hpp"
#include "fptlab/lct.hpp"
#include "fptlab/nu.hpp"
#include "fptlab/polynomial.hpp"
#include "fptlab/rational.hpp"
#include "fptlab/testideal.hpp"
#include "fptlab/thresholds.hpp"

#endif
