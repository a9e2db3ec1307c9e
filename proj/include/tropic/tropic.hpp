#pragma once

#include "tropic/rational.hpp"
#include "tropic/lattice.hpp"
#include "tropic/hull.hpp"
#include "tropic/feasibility.hpp"
#include "tropic/linalg.hpp"
#include "tropic/eps_scalar.hpp"
#include "tropic/semiring.hpp"
#include "tropic/polynomial.hpp"
#include "tropic/parser.hpp"
#include "tropic/puiseux.hpp"
#include "tropic/curve.hpp"
#include "tropic/subdivision.hpp"
#include "tropic/regularity.hpp"
#include "tropic/intersection.hpp"
#include "tropic/cubic_group.hpp"
#include "tropic/enumeration.hpp"
#include "tropic/recursion.hpp"
#include "tropic/json_io.hpp"
#include "tropic/svg.hpp"
