#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "momentlab/budget.hpp"
#include "momentlab/conditions/conditions.hpp"
#include "momentlab/survey/catalog.hpp"
#include "momentlab/topology/topology.hpp"

namespace momentlab {

enum class RealizabilityMode { on, off, necessary };
std::string to_string(RealizabilityMode mode);
RealizabilityMode parse_realizability_mode(const std::string& text);

struct ScanOptions {
  bool real_only = false;
  RealizabilityMode realizability = RealizabilityMode::on;
  /// Also run the element-enumeration dihedral search and record disagreements.
  bool wide_dihedral = false;
  unsigned jobs = 1;
  Budget budget;
};

/// One (group, sigma class) pair.
struct PairRecord {
  ConditionReport conditions;
  /// Only evaluated when both conditions fail.
  std::optional<Realizability> realizable;
  std::optional<bool> dihedral;  // set in real mode
  bool exception = false;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

struct EntryRecord {
  std::size_t degree = 0;
  std::string id;
  std::string order;
  std::vector<PairRecord> pairs;
  bool exceptional = false;
  /// Sigma classes dropped by the real-case dihedral filter.
  std::size_t filtered = 0;
  /// Budget or other per-entry failure; the entry is then undecided.
  std::string error;
  std::vector<std::string> warnings;

  friend bool operator==(const EntryRecord&, const EntryRecord&) = default;
};

struct DegreeSummary {
  std::size_t degree = 0;
  std::size_t groups = 0;
  std::size_t exceptional = 0;
  std::size_t undecided = 0;

  friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

struct ScanReport {
  bool real_only = false;
  RealizabilityMode realizability = RealizabilityMode::on;
  std::vector<EntryRecord> entries;
  std::vector<DegreeSummary> summary;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// For sigma with n = m, relabelled to (0..n-1)(n..2n-1): some
/// tau_c = i -> n + ((n - 1 - i + c) mod n) on the first cycle (and its
/// inverse on the second) lies in the group, c = 0..n-1.
bool dihedral_filter(const PermGroup& group, const SigmaInfinity& sigma);

/// Searches the group elements for an involution that swaps the two cycles
/// and conjugates sigma to its inverse.
bool dihedral_filter_wide(const PermGroup& group, const SigmaInfinity& sigma, const Budget& budget = {});

EntryRecord scan_entry(const CatalogEntry& entry, const ScanOptions& options);
ScanReport scan(const std::vector<CatalogEntry>& entries, const ScanOptions& options = {});

nlohmann::json to_json(const ScanReport& report);
ScanReport scan_report_from_json(const nlohmann::json& j);
/// One row per (degree, id, sigma class); entries without pairs get one row
/// with an empty sigma.
std::string to_csv(const ScanReport& report);

}  // namespace momentlab
