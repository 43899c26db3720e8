#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "momentlab/budget.hpp"
#include "momentlab/exact/linalg.hpp"
#include "momentlab/perm/blocks.hpp"
#include "momentlab/perm/sigma.hpp"

namespace momentlab {

/// Verdicts for one (group, sigma) pair. `sigma` and `b_witness` are in the
/// group's own labeling; the dimensions do not depend on the labeling.
struct ConditionReport {
  std::size_t degree = 0;
  std::string group_id;
  Permutation sigma;
  int n = 0;
  int m = 0;
  bool b_star = false;
  std::optional<PointSet> b_witness;
  bool c_star = false;
  long dim_v = 0;
  long dim_w = 0;
  long dim_vw = 0;

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

/// Smallest G-invariant subspace containing (m,..,m,-n,..,-n), the weights
/// being m on the support of the cycle of sigma through point 0.
SubspaceBasis build_V(const PermGroup& group, const SigmaInfinity& sigma);

/// Span of the indicator vectors of the blocks containing point 0, except {0}.
SubspaceBasis build_W(const PermGroup& group, const Budget& budget = {});

/// Smallest block B with {0} < B inside the support of the cycle through 0.
std::optional<PointSet> check_B_star(const PermGroup& group, const SigmaInfinity& sigma,
                                     const Budget& budget = {});

/// e_0 in V + W.
bool check_C_star(const PermGroup& group, const SigmaInfinity& sigma, const Budget& budget = {});

/// Relabels to the standard sigma, evaluates both conditions, maps the
/// witness back.
ConditionReport check_conditions(const PermGroup& group, const SigmaInfinity& sigma,
                                 const std::string& group_id = "", const Budget& budget = {});

/// Shape of a block system relative to a standard sigma = (0..n-1)(n..n+m-1).
/// Type a: every block lies inside one cycle; the blocks inside the first
/// cycle are the residue classes modulo n/d, d the block size.
/// Type b: every block meets both cycles; d = n / |B cap first| is the number
/// of blocks and r = (least point of B in the second cycle - n) mod d for the
/// block B through 0.
struct SystemType {
  enum class Kind { a, b } kind = Kind::a;
  int d = 1;
  int r = 0;

  friend bool operator==(const SystemType&, const SystemType&) = default;
};

/// Throws std::invalid_argument when sigma is not standard or does not
/// permute the blocks.
SystemType classify_system(const SigmaInfinity& sigma, const BlockSystem& system);

nlohmann::json to_json(const ConditionReport& r);
ConditionReport condition_report_from_json(const nlohmann::json& j);

}  // namespace momentlab
