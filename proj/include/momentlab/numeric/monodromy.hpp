#pragma once

#include <functional>

#include "momentlab/numeric/fiber.hpp"
#include "momentlab/perm/perm_group.hpp"
#include "momentlab/perm/sigma.hpp"

namespace momentlab {

struct MonodromyOptions {
  NumericConfig numeric;
  double base_angle = 0.3;       // first candidate argument of the base point
  double base_radius = 2.0;      // |t0| = base_radius * (1 + max |critical value|)
  unsigned jobs = 1;
};

/// Continues the fiber along t(s), s in [0, 1], and returns the roots at s = 1
/// in the order of `start`. `steps` accumulates accepted steps.
std::vector<Complex> track_fiber(const NumericLaurent& p, const std::vector<Complex>& start,
                                 const std::function<Complex(double)>& path, const NumericConfig& config,
                                 std::size_t& steps);

/// i -> index of the root of `to` nearest to from[i]; throws NumericFailure
/// unless this is a bijection with unambiguous matches.
Permutation match_fibers(const std::vector<Complex>& from, const std::vector<Complex>& to,
                         const NumericConfig& config);

struct MonodromyResult {
  Complex base;
  std::vector<Complex> base_fiber;  // root i is point i
  CriticalData critical;            // in loop order
  std::vector<Permutation> loops;   // loop product equals the big counterclockwise circle
  Permutation big_circle;
  SigmaInfinity sigma;              // inverse of the loop product
  PermGroup group;
  std::size_t steps = 0;
};

/// Numeric monodromy of z -> P(z) over C minus the critical values.
MonodromyResult monodromy(const LaurentPoly& p, const MonodromyOptions& options = {});

}  // namespace momentlab
