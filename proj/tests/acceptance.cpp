// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "momentlab/conditions/conditions.hpp"
#include "momentlab/exact/scalar_io.hpp"
#include "momentlab/numeric/monodromy.hpp"
#include "momentlab/perm/blocks.hpp"
#include "momentlab/solver/solver.hpp"
#include "momentlab/survey/scan.hpp"
#include "momentlab/topology/topology.hpp"

#include "relations.hpp"

using namespace momentlab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

LaurentPoly fixture(const std::string& name) { return read_laurent_file(oracle::data_path("fixtures/" + name)); }

Permutation P(const char* s, std::size_t n) { return parse_permutation(s, n); }

// pinned numeric tolerances
NumericConfig pinned() {
  NumericConfig c;
  c.residual_tol = 1e-12;
  c.cluster_tol = 1e-8;
  c.position_tol = 1e-3;
  c.large_t_factor = 1e3;
  c.max_threshold_doublings = 20;
  c.samples_per_quarter = 64;
  c.max_halvings = 20;
  c.match_tol = 1e-3;
  c.step_safety = 0.25;
  return c;
}

std::size_t nontrivial_systems(const PermGroup& g) {
  std::size_t count = 0;
  for (const auto& s : all_block_systems(g)) count += s.is_trivial(g.degree()) ? 0 : 1;
  return count;
}

std::vector<CycleShape> loop_shapes(const MonodromyResult& r) {
  std::vector<CycleShape> out;
  for (const auto& g : r.loops) out.push_back(g.cycle_shape());
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> c(-5, 5);
  LaurentPoly p;
  for (int e = lo; e <= hi; ++e) p += LaurentPoly::monomial(QuadScalar(Rational(c(rng), 1 + rng() % 3)), e);
  return p;
}

void c1(Outcome& o) {
  const auto t0 = Clock::now();
  const LaurentPoly p = fixture("e9d8.lp");
  const Window w{-3, 5};
  o.require(moment_bound(6, w) == 41, "K = 41");
  const SolutionSpace s = solve_moment_space(p, w, 6);
  o.require(s == oracle::e9d8_relations(), "space equals the relations");
  const Eigen::Index ex = classify_exceptional(s, explained_space(p, w));
  o.require(ex == 4, "exceptional dim 4");
  const double dt = seconds_since(t0);
  o.require(dt < 60, "under 1 min");
  o.detail << "dim " << s.dim() << ", exceptional " << ex << ", " << dt << "s";
}

void c2(Outcome& o) {
  const LaurentPoly p = fixture("a5_10.lp");
  const Window w{-5, 4};
  o.require(moment_bound(6, w) == 46, "K = 46");
  const SolutionSpace s = solve_moment_space(p, w, 6);
  o.require(s == oracle::a5_relations(), "space equals the relations");
  // a_4 = (-39603 + 17711 sqrt 5)/2 a_-4 and a_-5 = 0 on every solution
  const QuadScalar ratio = parse_scalar("(-39603/2+17711/2*sqrt(5))");
  for (const auto& q : s.basis()) {
    o.require(q.coeff(-5).is_zero(), "a_-5 = 0");
    o.require(q.coeff(4) == ratio * q.coeff(-4), "a_4 relation");
  }
  const Eigen::Index ex = classify_exceptional(s, explained_space(p, w));
  o.require(ex == 4, "exceptional dim 4");
  o.detail << "dim " << s.dim() << ", exceptional " << ex;
}

void c3(Outcome& o) {
  const LaurentPoly p = fixture("t16n195.lp");
  const LaurentPoly outer = fixture("t16n195_outer.lp");
  const LaurentPoly w = fixture("t16n195_w.lp");
  o.require(compose_outer(outer, w) == p, "outer(W) = P");
  const unsigned K = 166;
  const LaurentPoly q1 = parse_laurent("z^-2 + (280+198*sqrt(2))*z");
  const LaurentPoly q2 = parse_laurent("z^-1 - (17+12*sqrt(2))*z");
  o.require(verify_solution(p, q1, K).ok, "Q1 verifies");
  o.require(verify_solution(p, q2, K).ok, "Q2 verifies");
  for (unsigned i = 1; i <= 3; ++i) o.require(verify_solution(p, pow(w, i), K).ok, "W^" + std::to_string(i) + " verifies");
  SolveOptions opt;
  opt.zero_exponents = {0, 2, 4, 6};
  const SolutionSpace s = solve_moment_space(p, {-8, 7}, 12, opt);
  o.require(s.dim() == 6, "restricted space has dim 6");
  o.require(s.contains(q1) && s.contains(q2), "Q1, Q2 in the space");
  o.detail << "K " << K << ", dim " << s.dim();
}

void c4(Outcome& o) {
  for (const PermGroup& g : {a5_on_pairs(), affine_e9_d8()}) {
    const auto sigmas = sigma_candidates(g);
    o.require(!sigmas.empty(), "sigma classes exist");
    for (const auto& s : sigmas) {
      const ConditionReport r = check_conditions(g, s);
      o.require(!r.b_star && !r.c_star, "both conditions fail for " + to_string(s.perm));
    }
  }
  // monodromy of P~(z^2) with P~ = z^2 + z + 1/z
  NumericConfig cfg = pinned();
  MonodromyOptions mo;
  mo.numeric = cfg;
  const MonodromyResult wreath = monodromy(parse_laurent("z^4 + z^2 + z^-2"), mo);
  const ConditionReport rw = check_conditions(wreath.group, wreath.sigma);
  o.require(rw.b_star, "P~(z^2) monodromy satisfies B*");
  const PermGroup psl(6, {P("(1,2,3,4,5)", 6), P("(1,6)(2,5)", 6)});
  bool all_c = true;
  for (const auto& s : sigma_candidates(psl)) all_c = all_c && check_C_star(psl, s);
  o.require(all_c, "PSL(2,5) on 6 points satisfies C*");
  o.detail << "P~(z^2) group order " << wreath.group.order() << ", witness "
           << (rw.b_witness ? to_string(*rw.b_witness) : "none");
}

void c5(Outcome& o) {
  const auto t0 = Clock::now();
  const auto cat9 = load_catalog(oracle::data_path("catalogs/trans9.grp"));
  const auto cat10 = load_catalog(oracle::data_path("catalogs/trans10.grp"));
  o.require(cat9.size() == 34 && cat10.size() == 45, "catalog sizes 34 and 45");
  ScanOptions on;
  ScanOptions real;
  real.real_only = true;
  std::size_t counts[4] = {};
  std::size_t undecided = 0;
  int i = 0;
  for (const ScanOptions* opt : {&on, &real}) {
    for (const auto* cat : {&cat9, &cat10}) {
      const ScanReport r = scan(*cat, *opt);
      for (const auto& d : r.summary) {
        counts[i] += d.exceptional;
        undecided += d.undecided;
      }
      ++i;
    }
  }
  o.require(counts[0] == 1 && counts[1] == 2, "1 and 2 exceptional groups");
  o.require(counts[2] == 0 && counts[3] == 0, "0 and 0 with --real");
  o.require(undecided == 0, "no undecided entries");
  const double dt = seconds_since(t0);
  o.require(dt < 600, "under 10 min");
  o.detail << "exceptional " << counts[0] << "/" << counts[1] << ", real " << counts[2] << "/" << counts[3] << ", "
           << dt << "s";
}

void c6(Outcome& o) {
  BranchData d;
  d.degree = 10;
  d.sigma_shape = {5, 5};
  d.shapes = {{2, 2, 2, 2}, {3, 3, 3}};
  o.require(rh_genus(d) == 0, "genus 0");
  const PermGroup a5 = a5_on_pairs();
  for (const auto& s : sigma_candidates(a5)) {
    o.require(enumerate_branch_data(a5, s).size() == 1, "one branch datum for A5(10)");
    d.sigma_shape = s.perm.cycle_shape();
    const TupleSearch t = find_tuple(a5, s, d);
    o.require(t.verdict == Realizability::yes && validate_tuple(a5, s, d, t.tuple), "A5(10) tuple");
  }
  const PermGroup e9 = affine_e9_d8();
  BranchData e;
  e.degree = 9;
  e.shapes = {{2, 2, 2}, {4, 4}};
  for (const auto& s : sigma_candidates(e9)) {
    e.sigma_shape = s.perm.cycle_shape();
    const TupleSearch t = find_tuple(e9, s, e);
    o.require(t.verdict == Realizability::yes && validate_tuple(e9, s, e, t.tuple), "E9:D8 tuple");
  }
  o.detail << "genus " << rh_genus(d);
}

void c7(Outcome& o) {
  MonodromyOptions base;
  base.numeric = pinned();
  MonodromyOptions moved = base;
  moved.base_angle = 0.41;
  moved.base_radius = 2.5;
  MonodromyOptions fine = base;
  fine.numeric.samples_per_quarter = 128;

  for (const char* name : {"e9d8.lp", "a5_10.lp"}) {
    const auto t0 = Clock::now();
    const LaurentPoly p = fixture(name);
    const MonodromyResult r = monodromy(p, base);
    const bool e9 = std::string(name) == "e9d8.lp";
    if (e9) {
      o.require(r.group.order() == 72, "E9:D8 order 72");
      o.require(r.sigma.perm.cycle_shape() == CycleShape{6, 3}, "sigma shape (3,6)");
      o.require(loop_shapes(r) == std::vector<CycleShape>{{2, 2, 2, 1, 1, 1}, {4, 4, 1}}, "E9:D8 loop shapes");
    } else {
      o.require(r.group.order() == 60, "A5(10) order 60");
      o.require(nontrivial_systems(r.group) == 0, "A5(10) primitive");
    }
    for (const auto* opt : {&moved, &fine}) {
      const MonodromyResult x = monodromy(p, *opt);
      o.require(x.group.order() == r.group.order() && nontrivial_systems(x.group) == nontrivial_systems(r.group) &&
                    loop_shapes(x) == loop_shapes(r) && x.sigma.perm.cycle_shape() == r.sigma.perm.cycle_shape(),
                std::string(name) + " stable");
    }
    const double dt = seconds_since(t0);
    o.require(dt < 300, "under 5 min");
    o.detail << name << " order " << r.group.order() << " (" << dt << "s) ";
  }
}

void c8(Outcome& o) {
  struct Case {
    const char* file;
    Window window;
    int v;
    std::vector<int> zero;
  };
  const std::vector<Case> cases = {
      {"e9d8.lp", {-3, 5}, 6, {}},
      {"a5_10.lp", {-5, 4}, 6, {}},
      {"t16n195.lp", {-8, 7}, 12, {0, 2, 4, 6}},
  };
  const NumericConfig cfg = pinned();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(0, 6.283185307179586), mag(1, 4);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (const auto& c : cases) {
    const LaurentPoly p = fixture(c.file);
    SolveOptions opt;
    opt.zero_exponents = c.zero;
    const SolutionSpace s = solve_moment_space(p, c.window, c.v, opt);
    const double big = large_t_threshold(p, cfg);
    double worst_solution = 0;
    for (const auto& q : s.basis()) {
      for (int i = 0; i < 20; ++i) {
        worst_solution = std::max(worst_solution, cycle_sum(p, q, std::polar(big * mag(rng), ang(rng)), cfg).relative());
      }
    }
    o.require(worst_solution < 1e-6, std::string(c.file) + " solutions below 1e-6");
    std::size_t weak = 0;
    double lowest_max = 1e300, overall = 0;
    for (int r = 0; r < 20; ++r) {
      LaurentPoly q;
      do {
        q = LaurentPoly();
        for (int e = c.window.lo; e <= c.window.hi; ++e) {
          q += LaurentPoly::monomial(QuadScalar(Rational(coef(rng), 1 + static_cast<int>(rng() % 4))), e);
        }
      } while (s.contains(q));
      double mx = 0;
      for (int i = 0; i < 20; ++i) mx = std::max(mx, cycle_sum(p, q, std::polar(big * mag(rng), ang(rng)), cfg).relative());
      lowest_max = std::min(lowest_max, mx);
      overall = std::max(overall, mx);
      if (!(mx > 1e-2)) ++weak;
    }
    // each non-solution on its own must reach 1e-2 somewhere
    o.require(weak == 0, std::string(c.file) + " every non-solution above 1e-2");
    o.detail << c.file << ": solutions <= " << worst_solution << ", non-solutions min of max " << lowest_max << " ("
             << weak << "/20 below 1e-2, overall max " << overall << "); ";
  }
}

// All blocks containing point 0, by testing every subset against every element.
std::vector<PointSet> exhaustive_blocks(const PermGroup& g) {
  const auto elems = g.elements(100'000);
  const std::size_t n = g.degree();
  std::vector<PointSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    bool ok = true;
    for (const auto& h : elems) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) image |= std::uint64_t{1} << h(static_cast<Point>(i));
      }
      if (image != mask && (image & mask)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    PointSet b;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) b.push_back(static_cast<Point>(i));
    }
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void c9(Outcome& o) {
  std::mt19937 rng(99);
  // moment at k = 0 and linearity
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly p = random_poly(rng, -3, 3), q1 = random_poly(rng, -4, 4), q2 = random_poly(rng, -4, 4);
    o.require(moment(p, q1, 0).is_zero(), "moment at k = 0");
    const QuadScalar a(Rational(i - 50, 7)), b(Rational(3, i + 1));
    const unsigned k = 1 + static_cast<unsigned>(i % 4);
    o.require(moment(p, a * q1 + b * q2, k) == a * moment(p, q1, k) + b * moment(p, q2, k), "linearity");
  }
  // reduction: moment(P~(z^l), Q, k) = l moment(P~, Q~, k), so both vanish together
  for (int i = 0; i < 100; ++i) {
    const int l = 2 + i % 4;
    const LaurentPoly pt = random_poly(rng, -2, 2);
    if (power_substitution(pt) != 1) continue;
    const LaurentPoly p = substitute_power(pt, l);
    const LaurentPoly q = random_poly(rng, -3 * l, 3 * l);
    const PowerReduction r = reduce_by_power(p, q, l);
    for (unsigned k = 0; k <= 3; ++k) {
      o.require(moment(p, q, k) == QuadScalar(l) * moment(r.p, r.q, k), "reduction equivalence");
    }
  }
  // compositions
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly w = random_poly(rng, -1 - i % 2, 1 + i % 2);
    const LaurentPoly s = random_poly(rng, 1, 2 + i % 2);
    const LaurentPoly p = compose_outer(s, w);
    o.require(verify_solution(p, w, 8).ok && verify_solution(p, pow(w, 2), 8).ok, "composition solutions");
  }
  // exact residuals
  for (int i = 0; i < 40; ++i) {
    MatrixX<QuadScalar> m(4, 7);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        m(r, c) = QuadScalar(Rational(static_cast<int>(rng() % 7) - 3), Rational(static_cast<int>(rng() % 3) - 1), 5);
    if (i % 2) m.row(3) = m.row(0) + m.row(1);
    const MatrixX<QuadScalar> n = nullspace<QuadScalar>(m);
    const MatrixX<QuadScalar> prod = m * n;
    bool zero = n.cols() + rank<QuadScalar>(m) == m.cols();
    for (Eigen::Index r = 0; r < prod.rows(); ++r)
      for (Eigen::Index c = 0; c < prod.cols(); ++c) zero = zero && is_zero(prod(r, c));
    o.require(zero, "nullspace residual");
  }
  // blocks on every bundled group of order <= 1e4
  std::size_t groups = 0;
  std::vector<CatalogEntry> all;
  for (const char* f : {"catalogs/trans8.grp", "catalogs/trans9.grp", "catalogs/trans10.grp", "fixtures/t16n195.grp"}) {
    for (auto& e : load_catalog(oracle::data_path(f))) all.push_back(std::move(e));
  }
  for (const auto& e : all) {
    const PermGroup g = e.group();
    if (g.order() > 10'000) continue;
    auto got = blocks_containing_one(g);
    std::sort(got.begin(), got.end());
    o.require(got == exhaustive_blocks(g), "blocks for " + e.id);
    ++groups;
  }
  o.detail << "block oracle on " << groups << " groups";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"E9:D8 exact solution space", c1}, {"A5(10) exact solution space", c2}, {"t16n195 verification", c3},
      {"conditions", c4},                 {"exceptions table", c5},            {"genus and branch data", c6},
      {"numeric monodromy", c7},          {"numeric cycle-sum", c8},           {"property suites", c9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu %s: %s (%.1fs) %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                seconds_since(t0), o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed;
}
