#pragma once

#include <cstdint>
#include <vector>

#include "momentlab/budget.hpp"
#include "momentlab/perm/perm_group.hpp"

namespace momentlab {

/// Candidate monodromy at infinity: a permutation with exactly two cycles.
/// `n` is the length of the cycle through point 0 and `m` the other length.
/// Candidate enumeration only produces fixed-point-free ones; a cycle of
/// length 1 is accepted here so that bidegree (n, 1) inputs stay expressible.
struct SigmaInfinity {
  Permutation perm;
  int n = 0;
  int m = 0;

  /// Throws std::invalid_argument unless `perm` has exactly two cycles.
  static SigmaInfinity from_permutation(Permutation perm);
  /// (0,...,n-1)(n,...,n+m-1).
  static SigmaInfinity standard(int n, int m);

  std::size_t degree() const { return perm.degree(); }
  bool is_standard() const;
};

/// Conjugacy-class representatives (under the group itself) of the
/// fixed-point-free two-cycle elements. Each representative is the
/// lexicographically least element of its class; the list is sorted by cycle
/// shape (longest first cycle first) and then lexicographically.
///
/// Members are found by enumerating the group when its order is within
/// `budget.elements`, otherwise by sifting the two-cycle census of S_N when
/// that census is within the budget; otherwise BudgetExceeded.
std::vector<SigmaInfinity> sigma_candidates(const PermGroup& group, const Budget& budget = {});

/// All fixed-point-free two-cycle members of the group (same search policy).
std::vector<Permutation> two_cycle_members(const PermGroup& group, const Budget& budget = {});

/// Number of fixed-point-free permutations of degree N with two cycles.
std::uint64_t two_cycle_census_size(std::size_t degree);

struct StandardForm {
  PermGroup group;
  SigmaInfinity sigma;
  /// Old point -> new label.
  Permutation relabel;
};

/// Relabels so that sigma becomes (0..n-1)(n..n+m-1) with n >= m. Each cycle
/// is started at its smallest old point; with n = m the cycle through the
/// smaller point comes first.
StandardForm relabel_to_standard(const PermGroup& group, const SigmaInfinity& sigma);

/// Size of the orbit of the indicator vector of the cycle through point 0
/// under coordinate permutation by the group.
std::size_t vector_orbit_count(const PermGroup& group, const SigmaInfinity& sigma);

}  // namespace momentlab
