#include "momentlab/perm/blocks.hpp"

#include <algorithm>
#include <stdexcept>

#include "momentlab/errors.hpp"

namespace momentlab {

std::vector<PointSet> block_images(const PermGroup& group, const PointSet& block) {
  const std::size_t n = group.degree();
  if (block.empty()) throw std::invalid_argument("a block must be nonempty");
  if (n % block.size() != 0) return {};
  // owner[p] = index of the image containing p
  std::vector<int> owner(n, -1);
  std::vector<PointSet> images{block};
  for (Point p : block) owner[p] = 0;
  const std::size_t max_images = n / block.size();
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& g : group.generators()) {
      PointSet image;
      image.reserve(block.size());
      for (Point p : images[i]) image.push_back(g(p));
      std::sort(image.begin(), image.end());
      const int first_owner = owner[image.front()];
      if (first_owner >= 0) {
        if (images[static_cast<std::size_t>(first_owner)] != image) return {};
        continue;
      }
      for (Point p : image) {
        if (owner[p] >= 0) return {};
      }
      if (images.size() == max_images) return {};
      for (Point p : image) owner[p] = static_cast<int>(images.size());
      images.push_back(std::move(image));
    }
  }
  std::sort(images.begin(), images.end());
  return images;
}

bool is_block(const PermGroup& group, const PointSet& block) {
  return !block_images(group, block).empty();
}

std::vector<PointSet> blocks_containing_one(const PermGroup& group, const Budget& budget) {
  if (!group.is_transitive()) throw std::invalid_argument("block search needs a transitive group");
  const std::size_t n = group.degree();
  std::vector<PointSet> others;
  for (auto& orbit : group.stabilizer_orbits()) {
    if (!(orbit.size() == 1 && orbit.front() == 0)) others.push_back(std::move(orbit));
  }
  if (others.size() >= 64 || (std::uint64_t{1} << others.size()) > budget.subsets) {
    throw BudgetExceeded("block search over " + std::to_string(others.size()) +
                         " stabilizer orbits exceeds the subset budget");
  }
  std::vector<PointSet> found;
  const std::uint64_t count = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::size_t size = 1;
    for (std::size_t k = 0; k < others.size(); ++k) {
      if (mask >> k & 1U) size += others[k].size();
    }
    if (n % size != 0) continue;
    PointSet candidate{0};
    for (std::size_t k = 0; k < others.size(); ++k) {
      if (mask >> k & 1U) candidate.insert(candidate.end(), others[k].begin(), others[k].end());
    }
    std::sort(candidate.begin(), candidate.end());
    if (is_block(group, candidate)) found.push_back(std::move(candidate));
  }
  std::sort(found.begin(), found.end(), [](const PointSet& a, const PointSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

std::vector<BlockSystem> all_block_systems(const PermGroup& group, const Budget& budget) {
  std::vector<BlockSystem> out;
  for (const auto& block : blocks_containing_one(group, budget)) {
    out.push_back(BlockSystem{block_images(group, block)});
  }
  return out;
}

std::string to_string(const PointSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(static_cast<int>(set[i]) + 1);
  }
  return out + "}";
}

}  // namespace momentlab
