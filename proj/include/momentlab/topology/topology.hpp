#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "momentlab/budget.hpp"
#include "momentlab/perm/sigma.hpp"

namespace momentlab {

/// Finite branch shapes (a multiset, kept sorted descending) plus the shape
/// over infinity.
struct BranchData {
  std::size_t degree = 0;
  std::vector<CycleShape> shapes;
  CycleShape sigma_shape;

  friend bool operator==(const BranchData&, const BranchData&) = default;
};

/// Shape padded with 1's up to `degree` and sorted descending; throws if the
/// parts exceed the degree.
CycleShape pad_shape(CycleShape shape, std::size_t degree);

/// g with 2g - 2 = -2N + sum of defects over all shapes including infinity.
/// Throws std::invalid_argument on odd total defect or negative genus.
int rh_genus(const BranchData& data);

/// Total finite defect of a genus-0 cover with sigma of shape (n, m).
int ramification_budget(int n, int m);

/// Non-identity cycle shapes occurring in the group, with element counts.
std::map<CycleShape, std::uint64_t> shape_census(const PermGroup& group, const Budget& budget = {});

/// Every multiset of non-identity shapes of group elements whose defects sum
/// to ramification_budget(n, m), in lexicographic order.
std::vector<BranchData> enumerate_branch_data(const PermGroup& group, const SigmaInfinity& sigma,
                                              const Budget& budget = {});

enum class Realizability { yes, no, unknown };
std::string to_string(Realizability r);

struct TupleSearch {
  Realizability verdict = Realizability::unknown;
  std::vector<Permutation> tuple;  // sigma_1..sigma_r when found
  std::uint64_t nodes = 0;
};

/// Elements sigma_1..sigma_r with the given shapes, sigma_1 ... sigma_r sigma = 1
/// and <sigma_1, ..., sigma_r, sigma> = G. Depth-first over element lists,
/// shortest list first; the last element is forced by the product.
TupleSearch find_tuple(const PermGroup& group, const SigmaInfinity& sigma, const BranchData& data,
                       const Budget& budget = {});

/// Tries every branch datum in turn. `no` only when all searches were exhaustive.
TupleSearch realize(const PermGroup& group, const SigmaInfinity& sigma, const Budget& budget = {});

/// Re-checks shapes, product and generation.
bool validate_tuple(const PermGroup& group, const SigmaInfinity& sigma, const BranchData& data,
                    const std::vector<Permutation>& tuple);

nlohmann::json to_json(const BranchData& data);

}  // namespace momentlab
