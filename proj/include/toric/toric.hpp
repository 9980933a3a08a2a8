#pragma once

#include "toric/curvature.hpp"
#include "toric/exact.hpp"
#include "toric/io.hpp"
#include "toric/polynomial.hpp"
#include "toric/polytope.hpp"
#include "toric/potential.hpp"
#include "toric/quadrature.hpp"
#include "toric/sampling.hpp"
#include "toric/soliton.hpp"
#include "toric/types.hpp"
