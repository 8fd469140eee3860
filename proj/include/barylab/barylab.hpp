#pragma once

#include "barylab/characterize.hpp"
#include "barylab/exact_lp.hpp"
#include "barylab/geometry.hpp"
#include "barylab/hilbert_cube.hpp"
#include "barylab/measure.hpp"
#include "barylab/rational.hpp"
#include "barylab/simplex_t2.hpp"
#include "barylab/witness.hpp"
