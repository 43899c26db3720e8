#pragma once

#include <cstdint>

namespace momentlab {

/// Enumeration caps shared by the group-theoretic routines.
///
/// `elements` bounds explicit element lists (group enumeration or the
/// two-cycle census of S_N); `subsets` bounds the block search over unions
/// of point-stabilizer orbits; `tuple_nodes` bounds the generating-tuple
/// search. The environment variable MOMENTLAB_BUDGET, when set to a positive
/// integer, replaces the element cap.
struct Budget {
  std::uint64_t elements = 1'000'000;
  std::uint64_t subsets = std::uint64_t{1} << 20;
  std::uint64_t tuple_nodes = 5'000'000;

  static Budget from_environment();
};

}  // namespace momentlab
