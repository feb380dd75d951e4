#pragma once

#include "depthzero/arith.hpp"
#include "depthzero/budget.hpp"
#include "depthzero/census.hpp"
#include "depthzero/charlattice.hpp"
#include "depthzero/degrees.hpp"
#include "depthzero/errors.hpp"
#include "depthzero/fixedvec.hpp"
#include "depthzero/limits.hpp"
#include "depthzero/numtheory.hpp"
