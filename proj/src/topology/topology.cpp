#include "momentlab/topology/topology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "momentlab/errors.hpp"

namespace momentlab {

CycleShape pad_shape(CycleShape shape, std::size_t degree) {
  long total = 0;
  for (int part : shape) {
    if (part < 1) throw std::invalid_argument("cycle lengths must be positive");
    total += part;
  }
  if (total > static_cast<long>(degree)) throw std::invalid_argument("cycle shape exceeds the degree");
  shape.insert(shape.end(), degree - static_cast<std::size_t>(total), 1);
  std::sort(shape.begin(), shape.end(), std::greater<>());
  return shape;
}

int rh_genus(const BranchData& data) {
  const long n = static_cast<long>(data.degree);
  long total = defect(pad_shape(data.sigma_shape, data.degree));
  for (const auto& s : data.shapes) total += defect(pad_shape(s, data.degree));
  const long twice = total - 2 * n + 2;
  if (twice % 2 != 0) throw std::invalid_argument("total defect has the wrong parity");
  if (twice < 0) throw std::invalid_argument("defects too small for a connected cover");
  return static_cast<int>(twice / 2);
}

int ramification_budget(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("bidegree parts must be positive");
  return n + m;
}

namespace {

using ShapeLists = std::map<CycleShape, std::vector<Permutation>>;

ShapeLists elements_by_shape(const PermGroup& group, const Budget& budget) {
  ShapeLists lists;
  group.for_each_element([&](const Permutation& g) {
    if (!g.is_identity()) lists[g.cycle_shape()].push_back(g);
  }, budget.elements);
  return lists;
}

std::vector<BranchData> branch_data_from(const std::vector<CycleShape>& shapes, const SigmaInfinity& sigma) {
  const int target = ramification_budget(sigma.n, sigma.m);
  std::vector<BranchData> out;
  std::vector<CycleShape> chosen;
  std::function<void(std::size_t, int)> walk = [&](std::size_t from, int left) {
    if (left == 0) {
      BranchData d;
      d.degree = sigma.degree();
      d.shapes = chosen;
      d.sigma_shape = sigma.perm.cycle_shape();
      out.push_back(std::move(d));
      return;
    }
    for (std::size_t i = from; i < shapes.size(); ++i) {
      const int def = defect(shapes[i]);
      if (def > left) continue;
      chosen.push_back(shapes[i]);
      walk(i, left - def);
      chosen.pop_back();
    }
  };
  walk(0, target);
  std::sort(out.begin(), out.end(), [](const BranchData& a, const BranchData& b) { return a.shapes < b.shapes; });
  return out;
}

TupleSearch search(const PermGroup& group, const SigmaInfinity& sigma, const BranchData& data,
                   const ShapeLists& lists, const Budget& budget) {
  TupleSearch result;
  const std::size_t r = data.shapes.size();
  std::vector<const std::vector<Permutation>*> slots;
  std::vector<CycleShape> padded;
  for (const auto& s : data.shapes) {
    padded.push_back(pad_shape(s, group.degree()));
    auto it = lists.find(padded.back());
    if (it == lists.end()) {
      result.verdict = Realizability::no;
      return result;
    }
    slots.push_back(&it->second);
  }
  if (r == 0) {
    result.verdict = sigma.perm.is_identity() && group.order() == 1 ? Realizability::yes : Realizability::no;
    return result;
  }
  // shortest lists first, the longest one is forced by the product
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return slots[a]->size() < slots[b]->size(); });

  const Integer target_order = group.order();
  const Permutation sigma_inv = sigma.perm.inverse();
  std::vector<Permutation> tuple(r);
  bool exhausted = true;

  std::function<bool(std::size_t, const Permutation&)> walk = [&](std::size_t depth, const Permutation& prefix) {
    if (depth + 1 == r) {
      ++result.nodes;
      // prefix * last * sigma = 1
      Permutation last = prefix.inverse() * sigma_inv;
      if (last.cycle_shape() != padded[order[depth]]) return false;
      tuple[depth] = std::move(last);
      std::vector<Permutation> gens(tuple.begin(), tuple.end());
      gens.push_back(sigma.perm);
      return PermGroup(group.degree(), gens).order() == target_order;
    }
    for (const auto& g : *slots[order[depth]]) {
      if (++result.nodes > budget.tuple_nodes) {
        exhausted = false;
        return false;
      }
      tuple[depth] = g;
      if (walk(depth + 1, prefix * g)) return true;
      if (!exhausted) return false;
    }
    return false;
  };

  if (walk(0, Permutation(group.degree()))) {
    // search order, which is the order the product condition holds in
    result.tuple = tuple;
    result.verdict = Realizability::yes;
  } else {
    result.verdict = exhausted ? Realizability::no : Realizability::unknown;
  }
  return result;
}

}  // namespace

std::map<CycleShape, std::uint64_t> shape_census(const PermGroup& group, const Budget& budget) {
  std::map<CycleShape, std::uint64_t> census;
  group.for_each_element([&](const Permutation& g) {
    if (!g.is_identity()) ++census[g.cycle_shape()];
  }, budget.elements);
  return census;
}

std::vector<BranchData> enumerate_branch_data(const PermGroup& group, const SigmaInfinity& sigma,
                                              const Budget& budget) {
  std::vector<CycleShape> shapes;
  for (const auto& [shape, count] : shape_census(group, budget)) shapes.push_back(shape);
  return branch_data_from(shapes, sigma);
}

std::string to_string(Realizability r) {
  switch (r) {
    case Realizability::yes: return "yes";
    case Realizability::no: return "no";
    case Realizability::unknown: return "unknown";
  }
  return "unknown";
}

TupleSearch find_tuple(const PermGroup& group, const SigmaInfinity& sigma, const BranchData& data,
                       const Budget& budget) {
  if (data.degree != group.degree()) throw std::invalid_argument("branch data degree mismatch");
  int total = 0;
  for (const auto& s : data.shapes) total += defect(pad_shape(s, data.degree));
  if (total != ramification_budget(sigma.n, sigma.m)) {
    TupleSearch rejected;
    rejected.verdict = Realizability::no;
    return rejected;
  }
  return search(group, sigma, data, elements_by_shape(group, budget), budget);
}

TupleSearch realize(const PermGroup& group, const SigmaInfinity& sigma, const Budget& budget) {
  const ShapeLists lists = elements_by_shape(group, budget);
  std::vector<CycleShape> shapes;
  for (const auto& [shape, elems] : lists) shapes.push_back(shape);
  TupleSearch overall;
  overall.verdict = Realizability::no;
  for (const auto& data : branch_data_from(shapes, sigma)) {
    TupleSearch t = search(group, sigma, data, lists, budget);
    overall.nodes += t.nodes;
    if (t.verdict == Realizability::yes) {
      t.nodes = overall.nodes;
      return t;
    }
    if (t.verdict == Realizability::unknown) overall.verdict = Realizability::unknown;
  }
  return overall;
}

bool validate_tuple(const PermGroup& group, const SigmaInfinity& sigma, const BranchData& data,
                    const std::vector<Permutation>& tuple) {
  if (tuple.size() != data.shapes.size()) return false;
  std::vector<CycleShape> want;
  std::vector<CycleShape> got;
  Permutation prod(group.degree());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!group.contains(tuple[i])) return false;
    want.push_back(pad_shape(data.shapes[i], group.degree()));
    got.push_back(tuple[i].cycle_shape());
    prod = prod * tuple[i];
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got || !(prod * sigma.perm).is_identity()) return false;
  std::vector<Permutation> gens = tuple;
  gens.push_back(sigma.perm);
  return PermGroup(group.degree(), gens).order() == group.order();
}

nlohmann::json to_json(const BranchData& data) {
  nlohmann::json shapes = nlohmann::json::array();
  for (const auto& s : data.shapes) shapes.push_back(s);
  return {{"degree", data.degree}, {"sigma", data.sigma_shape}, {"finite_shapes", shapes}, {"genus", rh_genus(data)}};
}

}  // namespace momentlab
