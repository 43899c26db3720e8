#include "momentlab/perm/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "momentlab/errors.hpp"

namespace momentlab {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (const auto& g : generators_) {
    const Permutation residue = sift(g);
    if (!residue.is_identity()) add_generator(0, residue);
  }
}

void PermGroup::add_generator(std::size_t level, const Permutation& g) {
  while (levels_.size() <= level) {
    Level fresh;
    fresh.base = static_cast<Point>(levels_.size());
    fresh.transversal.resize(degree_);
    fresh.transversal[fresh.base] = Permutation(degree_);
    fresh.orbit.push_back(fresh.base);
    levels_.push_back(std::move(fresh));
  }
  levels_[level].generators.push_back(g);

  auto process = [&](Point p, const Permutation& s) {
    const Point q = s(p);
    const Permutation up_s = *levels_[level].transversal[p] * s;
    if (!levels_[level].transversal[q]) {
      levels_[level].transversal[q] = up_s;
      levels_[level].orbit.push_back(q);
      return;
    }
    const Permutation schreier = up_s * levels_[level].transversal[q]->inverse();
    if (schreier.is_identity()) return;
    // Sift through the deeper levels only.
    Permutation h = schreier;
    for (std::size_t j = level + 1; j < levels_.size(); ++j) {
      const Point image = h(levels_[j].base);
      if (!levels_[j].transversal[image]) break;
      h = h * levels_[j].transversal[image]->inverse();
    }
    if (!h.is_identity()) add_generator(level + 1, h);
  };

  const std::size_t old_size = levels_[level].orbit.size();
  for (std::size_t idx = 0; idx < old_size; ++idx) process(levels_[level].orbit[idx], g);
  for (std::size_t idx = old_size; idx < levels_[level].orbit.size(); ++idx) {
    const Point p = levels_[level].orbit[idx];
    const std::size_t ngens = levels_[level].generators.size();
    for (std::size_t k = 0; k < ngens; ++k) {
      const Permutation s = levels_[level].generators[k];
      process(p, s);
    }
  }
}

Permutation PermGroup::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
  Permutation h = g;
  for (const auto& level : levels_) {
    const Point image = h(level.base);
    if (!level.transversal[image]) return h;
    h = h * level.transversal[image]->inverse();
  }
  return h;
}

bool PermGroup::contains(const Permutation& g) const { return sift(g).is_identity(); }

Integer PermGroup::order() const {
  Integer n = 1;
  for (const auto& level : levels_) n *= static_cast<unsigned long>(level.orbit.size());
  return n;
}

std::uint64_t PermGroup::order_u64() const {
  const Integer n = order();
  if (n > Integer(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
  return n.convert_to<std::uint64_t>();
}

std::vector<std::vector<Point>> orbits_of(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree, false);
  for (std::size_t start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{static_cast<Point>(start)};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : gens) {
        const Point q = g(orbit[i]);
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree_) throw std::invalid_argument("point outside the group degree");
  for (auto& o : orbits_of(degree_, generators_)) {
    if (std::binary_search(o.begin(), o.end(), p)) return o;
  }
  return {p};
}

bool PermGroup::is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

std::vector<std::vector<Point>> PermGroup::stabilizer_orbits() const {
  if (levels_.size() < 2) return orbits_of(degree_, {});
  return orbits_of(degree_, levels_[1].generators);
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& f,
                                 std::uint64_t limit) const {
  if (order() > Integer(limit)) {
    throw BudgetExceeded("group of order " + order().str() + " exceeds element budget " +
                         std::to_string(limit));
  }
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t i, const Permutation& suffix) {
    if (i == levels_.size()) {
      f(suffix);
      return;
    }
    for (Point p : levels_[i].orbit) walk(i + 1, *levels_[i].transversal[p] * suffix);
  };
  walk(0, Permutation(degree_));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) { out.push_back(g); }, limit);
  return out;
}

PermGroup PermGroup::relabelled(const Permutation& relabel) const {
  std::vector<Permutation> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g.conjugate_by(relabel));
  return PermGroup(degree_, std::move(gens));
}

}  // namespace momentlab
