#pragma once

// Phase-space toolkit for 1-D paraxial fields: Wigner distributions, Radon
// projections, quadratic-phase (ABCD) propagation, and the chirplet oracle
// family that ties them together.

#include "paraxial/chirplet.hpp"
#include "paraxial/collins.hpp"
#include "paraxial/czt.hpp"
#include "paraxial/errors.hpp"
#include "paraxial/field.hpp"
#include "paraxial/fourier.hpp"
#include "paraxial/grid.hpp"
#include "paraxial/hermite.hpp"
#include "paraxial/radon.hpp"
#include "paraxial/ray_matrix.hpp"
#include "paraxial/report_io.hpp"
#include "paraxial/run_config.hpp"
#include "paraxial/theorem.hpp"
#include "paraxial/wigner.hpp"
