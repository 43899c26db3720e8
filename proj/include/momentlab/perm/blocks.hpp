#pragma once

#include <vector>

#include "momentlab/budget.hpp"
#include "momentlab/perm/perm_group.hpp"

namespace momentlab {

/// Sorted set of points.
using PointSet = std::vector<Point>;

/// Partition of {0..N-1} into equal-size cells permuted by the group.
/// Cells are sorted, and ordered by their smallest point.
struct BlockSystem {
  std::vector<PointSet> blocks;

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  bool is_trivial(std::size_t degree) const {
    return block_size() == 1 || block_size() == degree;
  }
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Images of `block` under the group (orbit of the set), when they are
/// pairwise equal or disjoint; empty when `block` is not a block.
std::vector<PointSet> block_images(const PermGroup& group, const PointSet& block);

bool is_block(const PermGroup& group, const PointSet& block);

/// Every block containing point 0, including {0} and the whole set, sorted by
/// size and then lexicographically. Candidates are unions of orbits of the
/// point stabilizer; throws BudgetExceeded when the number of unions to test
/// exceeds `budget.subsets`.
std::vector<PointSet> blocks_containing_one(const PermGroup& group, const Budget& budget = {});

/// One system per block containing point 0, in the same order.
std::vector<BlockSystem> all_block_systems(const PermGroup& group, const Budget& budget = {});

std::string to_string(const PointSet& set);

}  // namespace momentlab
