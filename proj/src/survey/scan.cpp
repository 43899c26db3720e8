#include "momentlab/survey/scan.hpp"

#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "momentlab/errors.hpp"

namespace momentlab {

std::string to_string(RealizabilityMode mode) {
  switch (mode) {
    case RealizabilityMode::on: return "on";
    case RealizabilityMode::off: return "off";
    case RealizabilityMode::necessary: return "necessary";
  }
  return "on";
}

RealizabilityMode parse_realizability_mode(const std::string& text) {
  if (text == "on") return RealizabilityMode::on;
  if (text == "off") return RealizabilityMode::off;
  if (text == "necessary") return RealizabilityMode::necessary;
  throw std::invalid_argument("realizability mode must be on, off or necessary, got '" + text + "'");
}

bool dihedral_filter(const PermGroup& group, const SigmaInfinity& sigma) {
  if (sigma.n != sigma.m) throw std::invalid_argument("dihedral filter needs n = m");
  const StandardForm sf = relabel_to_standard(group, sigma);
  const int n = sigma.n;
  std::vector<Point> images(static_cast<std::size_t>(2 * n));
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) {
      const int k = ((n - 1 - i + c) % n + n) % n;
      images[static_cast<std::size_t>(i)] = static_cast<Point>(n + k);
      images[static_cast<std::size_t>(n + k)] = static_cast<Point>(i);
    }
    if (sf.group.contains(Permutation::from_images(images))) return true;
  }
  return false;
}

bool dihedral_filter_wide(const PermGroup& group, const SigmaInfinity& sigma, const Budget& budget) {
  if (sigma.n != sigma.m) throw std::invalid_argument("dihedral filter needs n = m");
  const StandardForm sf = relabel_to_standard(group, sigma);
  const Permutation& s = sf.sigma.perm;
  const Permutation s_inv = s.inverse();
  const auto n = static_cast<Point>(sigma.n);
  bool found = false;
  sf.group.for_each_element([&](const Permutation& t) {
    if (found || t(0) < n) return;
    if ((t * t).is_identity() && s.conjugate_by(t) == s_inv) found = true;
  }, budget.elements);
  return found;
}

EntryRecord scan_entry(const CatalogEntry& entry, const ScanOptions& options) {
  EntryRecord rec;
  rec.degree = entry.degree;
  rec.id = entry.id;
  try {
    const PermGroup group = entry.group();
    rec.order = group.order().str();
    for (const auto& sigma : sigma_candidates(group, options.budget)) {
      PairRecord pair;
      if (options.real_only) {
        if (sigma.n != sigma.m) {
          ++rec.filtered;
          continue;
        }
        const bool narrow = dihedral_filter(group, sigma);
        if (options.wide_dihedral) {
          try {
            if (dihedral_filter_wide(group, sigma, options.budget) != narrow) {
              rec.warnings.push_back("dihedral searches disagree for " + to_string(sigma.perm));
            }
          } catch (const BudgetExceeded& e) {
            rec.warnings.push_back(std::string("wide dihedral search skipped: ") + e.what());
          }
        }
        if (!narrow) {
          ++rec.filtered;
          continue;
        }
        pair.dihedral = true;
      }
      pair.conditions = check_conditions(group, sigma, entry.id, options.budget);
      if (!pair.conditions.b_star && !pair.conditions.c_star) {
        switch (options.realizability) {
          case RealizabilityMode::off:
            pair.realizable = Realizability::unknown;
            break;
          case RealizabilityMode::necessary:
            pair.realizable = enumerate_branch_data(group, sigma, options.budget).empty()
                                  ? Realizability::no
                                  : Realizability::unknown;
            break;
          case RealizabilityMode::on:
            try {
              pair.realizable = realize(group, sigma, options.budget).verdict;
            } catch (const BudgetExceeded& e) {
              pair.realizable = Realizability::unknown;
              rec.warnings.push_back(std::string("realizability: ") + e.what());
            }
            break;
        }
        pair.exception = pair.realizable != Realizability::no;
      }
      rec.exceptional = rec.exceptional || pair.exception;
      rec.pairs.push_back(std::move(pair));
    }
  } catch (const BudgetExceeded& e) {
    rec.error = e.what();
  }
  return rec;
}

ScanReport scan(const std::vector<CatalogEntry>& entries, const ScanOptions& options) {
  ScanReport report;
  report.real_only = options.real_only;
  report.realizability = options.realizability;
  report.entries.resize(entries.size());

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(entries.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) report.entries[i] = scan_entry(entries[i], options);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<std::size_t, DegreeSummary> by_degree;
  for (const auto& e : report.entries) {
    DegreeSummary& s = by_degree[e.degree];
    s.degree = e.degree;
    ++s.groups;
    if (e.exceptional) ++s.exceptional;
    if (!e.error.empty()) ++s.undecided;
  }
  for (auto& [d, s] : by_degree) report.summary.push_back(s);
  return report;
}

}  // namespace momentlab
