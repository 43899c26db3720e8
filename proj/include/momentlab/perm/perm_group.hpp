#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "momentlab/budget.hpp"
#include "momentlab/exact/rational.hpp"
#include "momentlab/perm/permutation.hpp"

namespace momentlab {

/// Finitely generated permutation group with a deterministic stabilizer
/// chain on the base 0, 1, 2, ... (levels whose orbit is a single point are
/// kept, so level i always stabilizes the points 0..i-1).
///
/// The chain is built in the constructor; afterwards every query is const
/// and safe to call from several threads.
class PermGroup {
 public:
  struct Level {
    Point base;
    std::vector<Permutation> generators;              // strong generators of this level
    std::vector<std::optional<Permutation>> transversal;  // u_p maps base to p
    std::vector<Point> orbit;
  };

  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Level>& chain() const noexcept { return levels_; }

  Integer order() const;
  /// Order as a 64-bit count, saturating at UINT64_MAX.
  std::uint64_t order_u64() const;

  bool contains(const Permutation& g) const;
  /// Residue of g after sifting; identity iff g is a member.
  Permutation sift(const Permutation& g) const;

  std::vector<Point> orbit(Point p) const;
  bool is_transitive() const;
  /// Orbits of the stabilizer of point 0, ordered by their smallest point.
  std::vector<std::vector<Point>> stabilizer_orbits() const;

  /// Calls `f` on every element, in a fixed order. Throws BudgetExceeded when
  /// the order exceeds `limit`.
  void for_each_element(const std::function<void(const Permutation&)>& f,
                        std::uint64_t limit) const;
  std::vector<Permutation> elements(std::uint64_t limit) const;

  /// Image of the group under relabelling point i to `relabel(i)`.
  PermGroup relabelled(const Permutation& relabel) const;

 private:
  void add_generator(std::size_t level, const Permutation& g);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

/// Orbits of an arbitrary generating list on {0..degree-1}.
std::vector<std::vector<Point>> orbits_of(std::size_t degree, const std::vector<Permutation>& gens);

}  // namespace momentlab
