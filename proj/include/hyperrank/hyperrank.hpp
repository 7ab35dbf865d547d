#pragma once

#include "hyperrank/certify.hpp"
#include "hyperrank/gkz.hpp"
#include "hyperrank/int_matrix.hpp"
#include "hyperrank/linalg.hpp"
#include "hyperrank/polytope.hpp"
#include "hyperrank/puiseux.hpp"
#include "hyperrank/rational.hpp"
#include "hyperrank/toric.hpp"
