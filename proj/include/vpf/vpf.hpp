#pragma once

// Umbrella header: exact counting of nonnegative integer solutions of
// M beta = alpha, the quasi-polynomials that describe the count per
// fundamental cone, and the volume and lattice-point applications built on
// them.

#include "applications.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "quasi.hpp"
#include "rational.hpp"
#include "truncated_power.hpp"
