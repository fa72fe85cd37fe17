#pragma once

#include <stdexcept>
#include <string>

namespace vpf {

// Base of everything thrown on bad inputs or violated preconditions.
// Catch this at API boundaries; the message names the violated condition.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The query point lies on a hyperplane spanned by matrix columns.
// Callers that own the point usually perturb it and retry.
struct non_generic_error : error {
  using error::error;
};

// A point sits on a chamber wall, so no single open chamber contains it.
struct wall_error : error {
  using error::error;
};

// A point is outside the cone (or outside a formula's validity region).
struct outside_cone_error : error {
  using error::error;
};

// The linear system offered for interpolation has deficient rank.
struct singular_system_error : error {
  using error::error;
};

// An overdetermined interpolation system has no exact solution; with
// truncated-power samples this means the points straddle a chamber wall.
struct inconsistent_samples_error : error {
  using error::error;
};

// A cyclotomic value was asked to become a rational but is not one.
struct not_rational_error : error {
  using error::error;
};

}  // namespace vpf
