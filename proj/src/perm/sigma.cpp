#include "momentlab/perm/sigma.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "momentlab/errors.hpp"

namespace momentlab {

SigmaInfinity SigmaInfinity::from_permutation(Permutation perm) {
  const auto cycles = perm.cycles(true);
  if (cycles.size() != 2) {
    throw std::invalid_argument("sigma must have exactly two cycles, got " + to_string(perm));
  }
  SigmaInfinity s;
  const auto& first = cycles[0][0] == 0 ? cycles[0] : cycles[1];
  s.n = static_cast<int>(first.size());
  s.m = static_cast<int>(perm.degree()) - s.n;
  s.perm = std::move(perm);
  return s;
}

SigmaInfinity SigmaInfinity::standard(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("sigma needs n, m >= 1");
  std::vector<std::vector<int>> cycles(2);
  for (int i = 0; i < n; ++i) cycles[0].push_back(i);
  for (int i = 0; i < m; ++i) cycles[1].push_back(n + i);
  return from_permutation(Permutation::from_cycles(static_cast<std::size_t>(n + m), cycles));
}

bool SigmaInfinity::is_standard() const { return perm == standard(n, m).perm; }

namespace {

bool is_fpf_two_cycle(const Permutation& g) {
  const auto shape = g.cycle_shape();
  return shape.size() == 2 && shape[1] > 1;
}

// Every fixed-point-free permutation with two cycles, each produced once:
// the cycle through 0 as an ordered tuple, the other cycle starting at its
// smallest point.
void for_each_two_cycle(std::size_t n, const std::function<void(const Permutation&)>& f) {
  std::vector<Point> images(n);
  std::vector<bool> used(n, false);
  used[0] = true;

  std::function<void(Point, Point, std::size_t)> second = [&](Point start, Point prev, std::size_t left) {
    if (left == 0) {
      images[prev] = start;
      f(Permutation::from_images(images));
      return;
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (used[q]) continue;
      used[q] = true;
      images[prev] = static_cast<Point>(q);
      second(start, static_cast<Point>(q), left - 1);
      used[q] = false;
    }
  };

  std::function<void(Point, std::size_t)> first = [&](Point prev, std::size_t len) {
    const std::size_t rest = n - len;
    if (len >= 2 && rest >= 2) {
      images[prev] = 0;
      Point start = 0;
      while (used[start]) ++start;
      used[start] = true;
      second(start, start, rest - 1);
      used[start] = false;
    }
    if (rest <= 2) return;
    for (std::size_t q = 1; q < n; ++q) {
      if (used[q]) continue;
      used[q] = true;
      images[prev] = static_cast<Point>(q);
      first(static_cast<Point>(q), len + 1);
      used[q] = false;
    }
  };
  first(0, 1);
}

}  // namespace

std::uint64_t two_cycle_census_size(std::size_t degree) {
  // sum over a = |cycle through 0| of C(N-1, a-1)(a-1)!(N-a-1)! = (N-1)!/(N-a)
  if (degree < 4) return 0;
  long double total = 0;
  long double fact = 1;
  for (std::size_t k = 2; k < degree; ++k) fact *= static_cast<long double>(k);
  for (std::size_t a = 2; a + 2 <= degree; ++a) total += fact / static_cast<long double>(degree - a);
  if (total >= 1.8e19L) return UINT64_MAX;
  return static_cast<std::uint64_t>(total + 0.5L);
}

std::vector<Permutation> two_cycle_members(const PermGroup& group, const Budget& budget) {
  std::vector<Permutation> out;
  if (group.order() <= Integer(budget.elements)) {
    group.for_each_element([&](const Permutation& g) {
      if (is_fpf_two_cycle(g)) out.push_back(g);
    }, budget.elements);
  } else if (two_cycle_census_size(group.degree()) <= budget.elements) {
    for_each_two_cycle(group.degree(), [&](const Permutation& g) {
      if (group.contains(g)) out.push_back(g);
    });
  } else {
    throw BudgetExceeded("group of order " + group.order().str() + " on " + std::to_string(group.degree()) +
                         " points exceeds the element budget");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SigmaInfinity> sigma_candidates(const PermGroup& group, const Budget& budget) {
  const auto members = two_cycle_members(group, budget);
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> reps;
  // members is sorted, so the first unseen element is its class minimum
  for (const auto& x : members) {
    if (seen.count(x)) continue;
    std::vector<Permutation> cls{x};
    seen.insert(x);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (const auto& g : group.generators()) {
        Permutation y = cls[i].conjugate_by(g);
        if (seen.insert(y).second) cls.push_back(std::move(y));
      }
    }
    reps.push_back(x);
  }
  std::vector<SigmaInfinity> out;
  out.reserve(reps.size());
  for (auto& r : reps) out.push_back(SigmaInfinity::from_permutation(std::move(r)));
  std::stable_sort(out.begin(), out.end(), [](const SigmaInfinity& a, const SigmaInfinity& b) {
    const int la = std::max(a.n, a.m);
    const int lb = std::max(b.n, b.m);
    return la > lb;
  });
  return out;
}

StandardForm relabel_to_standard(const PermGroup& group, const SigmaInfinity& sigma) {
  const std::size_t degree = group.degree();
  if (sigma.degree() != degree) throw std::invalid_argument("sigma degree mismatch");
  auto cycles = sigma.perm.cycles(true);
  if (cycles.size() != 2) throw std::invalid_argument("sigma must have exactly two cycles");
  // cycles() starts each cycle at its smallest point and orders by that point
  if (cycles[1].size() > cycles[0].size()) std::swap(cycles[0], cycles[1]);
  std::vector<Point> images(degree);
  Point next = 0;
  for (const auto& c : cycles) {
    for (Point p : c) images[p] = next++;
  }
  StandardForm out{group.relabelled(Permutation::from_images(images)), {}, Permutation::from_images(images)};
  out.sigma = SigmaInfinity::from_permutation(sigma.perm.conjugate_by(out.relabel));
  return out;
}

std::size_t vector_orbit_count(const PermGroup& group, const SigmaInfinity& sigma) {
  const std::size_t degree = group.degree();
  std::string start(degree, '\0');
  // cycles are ordered by least point, so the first one passes through 0
  const auto cycles = sigma.perm.cycles(true);
  for (Point p : cycles.front()) start[p] = 1;
  std::unordered_set<std::string> seen{start};
  std::vector<std::string> queue{start};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : group.generators()) {
      std::string image(degree, '\0');
      for (std::size_t p = 0; p < degree; ++p) {
        if (queue[i][p]) image[g(static_cast<Point>(p))] = 1;
      }
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return queue.size();
}

}  // namespace momentlab
