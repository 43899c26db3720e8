#include "momentlab/conditions/conditions.hpp"

#include <algorithm>
#include <stdexcept>

namespace momentlab {

namespace {

std::vector<Point> first_cycle(const SigmaInfinity& sigma) {
  for (auto& c : sigma.perm.cycles(true)) {
    if (c.front() == 0) return c;
  }
  return {};
}

// (g v)_{g(i)} = v_i
VectorX<Rational> act(const Permutation& g, const VectorX<Rational>& v) {
  VectorX<Rational> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(g(static_cast<Point>(i))) = v(i);
  return out;
}

VectorX<Rational> indicator(std::size_t degree, const PointSet& set) {
  VectorX<Rational> v = VectorX<Rational>::Zero(static_cast<Eigen::Index>(degree));
  for (Point p : set) v(p) = 1;
  return v;
}

}  // namespace

SubspaceBasis build_V(const PermGroup& group, const SigmaInfinity& sigma) {
  const std::size_t degree = group.degree();
  if (sigma.degree() != degree) throw std::invalid_argument("sigma degree mismatch");
  VectorX<Rational> v0(static_cast<Eigen::Index>(degree));
  for (Eigen::Index i = 0; i < v0.size(); ++i) v0(i) = -sigma.n;
  for (Point p : first_cycle(sigma)) v0(p) = sigma.m;

  SubspaceBasis span(static_cast<Eigen::Index>(degree));
  std::vector<VectorX<Rational>> queue;
  if (span.insert(v0)) queue.push_back(v0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : group.generators()) {
      VectorX<Rational> image = act(g, queue[i]);
      if (span.insert(image)) queue.push_back(std::move(image));
    }
  }
  return span;
}

SubspaceBasis build_W(const PermGroup& group, const Budget& budget) {
  SubspaceBasis span(static_cast<Eigen::Index>(group.degree()));
  for (const auto& block : blocks_containing_one(group, budget)) {
    if (block.size() > 1) span.insert(indicator(group.degree(), block));
  }
  return span;
}

std::optional<PointSet> check_B_star(const PermGroup& group, const SigmaInfinity& sigma,
                                     const Budget& budget) {
  std::vector<bool> in_first(group.degree(), false);
  for (Point p : first_cycle(sigma)) in_first[p] = true;
  for (const auto& block : blocks_containing_one(group, budget)) {
    if (block.size() < 2) continue;
    if (std::all_of(block.begin(), block.end(), [&](Point p) { return in_first[p]; })) return block;
  }
  return std::nullopt;
}

bool check_C_star(const PermGroup& group, const SigmaInfinity& sigma, const Budget& budget) {
  const SubspaceBasis vw = build_V(group, sigma).sum(build_W(group, budget));
  VectorX<Rational> e0 = VectorX<Rational>::Zero(static_cast<Eigen::Index>(group.degree()));
  e0(0) = 1;
  return vw.contains(e0);
}

ConditionReport check_conditions(const PermGroup& group, const SigmaInfinity& sigma,
                                 const std::string& group_id, const Budget& budget) {
  const StandardForm std_form = relabel_to_standard(group, sigma);
  const PermGroup& g = std_form.group;
  const SigmaInfinity& s = std_form.sigma;

  ConditionReport r;
  r.degree = group.degree();
  r.group_id = group_id;
  r.sigma = sigma.perm;
  r.n = s.n;
  r.m = s.m;

  const SubspaceBasis v = build_V(g, s);
  const SubspaceBasis w = build_W(g, budget);
  const SubspaceBasis vw = v.sum(w);
  r.dim_v = static_cast<long>(v.dim());
  r.dim_w = static_cast<long>(w.dim());
  r.dim_vw = static_cast<long>(vw.dim());

  if (auto witness = check_B_star(g, s, budget)) {
    const Permutation back = std_form.relabel.inverse();
    PointSet original;
    for (Point p : *witness) original.push_back(back(p));
    std::sort(original.begin(), original.end());
    r.b_star = true;
    r.b_witness = std::move(original);
  }
  VectorX<Rational> e0 = VectorX<Rational>::Zero(static_cast<Eigen::Index>(group.degree()));
  e0(0) = 1;
  r.c_star = vw.contains(e0);
  return r;
}

SystemType classify_system(const SigmaInfinity& sigma, const BlockSystem& system) {
  if (!sigma.is_standard()) throw std::invalid_argument("classify_system needs the standard sigma");
  const int n = sigma.n;
  const int m = sigma.m;
  const std::size_t degree = sigma.degree();

  std::vector<int> owner(degree, -1);
  for (std::size_t b = 0; b < system.blocks.size(); ++b) {
    for (Point p : system.blocks[b]) {
      if (p >= degree || owner[p] >= 0) throw std::invalid_argument("blocks do not partition the points");
      owner[p] = static_cast<int>(b);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw std::invalid_argument("blocks do not cover the points");
  }
  for (const auto& block : system.blocks) {
    const int target = owner[sigma.perm(block.front())];
    for (Point p : block) {
      if (owner[sigma.perm(p)] != target) throw std::invalid_argument("sigma does not permute the blocks");
    }
  }

  const PointSet& b0 = system.blocks[static_cast<std::size_t>(owner[0])];
  PointSet first;
  PointSet second;
  for (Point p : b0) (p < n ? first : second).push_back(p);

  SystemType t;
  if (second.empty()) {
    t.kind = SystemType::Kind::a;
    t.d = static_cast<int>(b0.size());
    if (n % t.d != 0) throw std::invalid_argument("block size does not divide n");
    const int step = n / t.d;
    for (Point p : first) {
      if (p % step != 0) throw std::invalid_argument("block is not a residue class");
    }
    return t;
  }
  t.kind = SystemType::Kind::b;
  t.d = n / static_cast<int>(first.size());
  if (n % static_cast<int>(first.size()) != 0 || m % t.d != 0) {
    throw std::invalid_argument("mixed block sizes inconsistent with sigma");
  }
  t.r = (static_cast<int>(second.front()) - n) % t.d;
  return t;
}

nlohmann::json to_json(const ConditionReport& r) {
  nlohmann::json witness = nullptr;
  if (r.b_witness) {
    witness = nlohmann::json::array();
    for (Point p : *r.b_witness) witness.push_back(static_cast<int>(p) + 1);
  }
  return {
      {"degree", r.degree},
      {"group_id", r.group_id},
      {"sigma", to_string(r.sigma)},
      {"n", r.n},
      {"m", r.m},
      {"b_star", r.b_star},
      {"b_witness", witness},
      {"c_star", r.c_star},
      {"dims", {{"V", r.dim_v}, {"W", r.dim_w}, {"VW", r.dim_vw}}},
  };
}

ConditionReport condition_report_from_json(const nlohmann::json& j) {
  ConditionReport r;
  r.degree = j.at("degree").get<std::size_t>();
  r.group_id = j.at("group_id").get<std::string>();
  r.sigma = parse_permutation(j.at("sigma").get<std::string>(), r.degree);
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.b_star = j.at("b_star").get<bool>();
  if (!j.at("b_witness").is_null()) {
    PointSet w;
    for (const auto& p : j.at("b_witness")) w.push_back(static_cast<Point>(p.get<int>() - 1));
    r.b_witness = std::move(w);
  }
  r.c_star = j.at("c_star").get<bool>();
  r.dim_v = j.at("dims").at("V").get<long>();
  r.dim_w = j.at("dims").at("W").get<long>();
  r.dim_vw = j.at("dims").at("VW").get<long>();
  return r;
}

}  // namespace momentlab
