#pragma once

#include "rhombic/bott_samelson.hpp"
#include "rhombic/error.hpp"
#include "rhombic/flips.hpp"
#include "rhombic/label_set.hpp"
#include "rhombic/oracle.hpp"
#include "rhombic/permutation.hpp"
#include "rhombic/qpolynomial.hpp"
#include "rhombic/render.hpp"
#include "rhombic/serialize.hpp"
#include "rhombic/tiling.hpp"
#include "rhombic/zonotopal.hpp"
