#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "momentlab/errors.hpp"
#include "momentlab/numeric/monodromy.hpp"
#include "momentlab/perm/blocks.hpp"

#include "relations.hpp"

using namespace momentlab;

namespace {

LaurentPoly fixture(const char* name) { return read_laurent_file(oracle::data_path(std::string("fixtures/") + name)); }

std::vector<CycleShape> loop_shapes(const MonodromyResult& r) {
  std::vector<CycleShape> out;
  for (const auto& g : r.loops) out.push_back(g.cycle_shape());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t nontrivial_systems(const PermGroup& g) {
  std::size_t count = 0;
  for (const auto& s : all_block_systems(g)) count += s.is_trivial(g.degree()) ? 0 : 1;
  return count;
}

}  // namespace

TEST_CASE("roots of a polynomial") {
  // (z - 1)(z + 2)(z - 3i)
  const Complex i(0, 1);
  const std::vector<Complex> c = {6.0 * i, -2.0 - 3.0 * i, 1.0 - 3.0 * i, 1.0};
  auto roots = polynomial_roots(c);
  REQUIRE(roots.size() == 3);
  for (Complex want : {Complex(1), Complex(-2), 3.0 * i}) {
    double best = 1e9;
    for (auto r : roots) best = std::min(best, std::abs(r - want));
    CHECK(best < 1e-10);
  }
}

TEST_CASE("fiber of z + 1/z") {
  const LaurentPoly p = parse_laurent("z + z^-1");
  const Complex t(0.7, -1.3);
  const Fiber f = fiber_roots(p, t);
  REQUIRE(f.roots.size() == 2);
  // roots of z^2 - t z + 1
  const Complex d = std::sqrt(t * t - 4.0);
  for (Complex want : {(t + d) / 2.0, (t - d) / 2.0}) {
    double best = 1e9;
    for (auto r : f.roots) best = std::min(best, std::abs(r - want));
    CHECK(best < 1e-12);
  }
  CHECK(std::abs(f.roots[0] * f.roots[1] - 1.0) < 1e-12);
  CHECK_THROWS_AS(fiber_roots(parse_laurent("z^2 + z"), t), std::invalid_argument);
}

TEST_CASE("fibers meet the residual bound on the fixtures") {
  for (const char* name : {"e9d8.lp", "a5_10.lp", "t16n195.lp"}) {
    const LaurentPoly p = fixture(name);
    const NumericLaurent np(p);
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-50, 50);
    for (int i = 0; i < 5; ++i) {
      const Complex t(u(rng), u(rng));
      const Fiber f = fiber_roots(p, t);
      CHECK(f.roots.size() == static_cast<std::size_t>(p.n() + p.m()));
      for (auto z : f.roots) CHECK(std::abs(np(z) - t) <= 1e-12 * (np.magnitude(z) + std::abs(t)));
    }
  }
}

TEST_CASE("splitting the fiber at large t") {
  const LaurentPoly p = fixture("e9d8.lp");
  const double big = large_t_threshold(p);
  CHECK(big >= 1e3);
  const InfinitySplit s = classify_at_infinity(p, Complex(big, big));
  CHECK(s.near_infinity.size() == 6);
  CHECK(s.near_zero.size() == 3);
  double inner = 0, outer = 1e300;
  for (auto z : s.near_infinity) outer = std::min(outer, std::abs(z));
  for (auto z : s.near_zero) inner = std::max(inner, std::abs(z));
  CHECK(outer > 10 * inner);
}

TEST_CASE("critical data") {
  const CriticalData zz = critical_data(parse_laurent("z + z^-1"));
  REQUIRE(zz.values.size() == 2);
  std::vector<double> re;
  for (const auto& v : zz.values) {
    re.push_back(v.value.real());
    CHECK(std::abs(v.value.imag()) < 1e-12);
    CHECK(v.shape == CycleShape{2});
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == Catch::Approx(-2.0).epsilon(1e-12));
  CHECK(re[1] == Catch::Approx(2.0).epsilon(1e-12));

  const CriticalData e9 = critical_data(fixture("e9d8.lp"));
  std::vector<CycleShape> shapes;
  for (const auto& v : e9.values) shapes.push_back(v.shape);
  std::sort(shapes.begin(), shapes.end());
  CHECK(shapes == std::vector<CycleShape>{{2, 2, 2, 1, 1, 1}, {4, 4, 1}});

  const CriticalData a5 = critical_data(fixture("a5_10.lp"));
  shapes.clear();
  for (const auto& v : a5.values) shapes.push_back(v.shape);
  std::sort(shapes.begin(), shapes.end());
  CHECK(shapes == std::vector<CycleShape>{{2, 2, 2, 2, 1, 1}, {3, 3, 3, 1}});
}

TEST_CASE("monodromy of z + 1/z") {
  const MonodromyResult r = monodromy(parse_laurent("z + z^-1"));
  CHECK(r.group.order() == 2);
  REQUIRE(r.loops.size() == 2);
  for (const auto& g : r.loops) CHECK(g.cycle_shape() == CycleShape{2});
  CHECK(r.sigma.n == 1);
  CHECK(r.sigma.m == 1);
}

TEST_CASE("monodromy of the fixtures") {
  const MonodromyResult e9 = monodromy(fixture("e9d8.lp"));
  CHECK(e9.group.order() == 72);
  CHECK(e9.sigma.perm.cycle_shape() == CycleShape{6, 3});
  CHECK(loop_shapes(e9) == std::vector<CycleShape>{{2, 2, 2, 1, 1, 1}, {4, 4, 1}});
  // loop product is the big circle, and sigma closes it up
  Permutation prod(9);
  for (const auto& g : e9.loops) prod = prod * g;
  CHECK(prod == e9.big_circle);
  CHECK((prod * e9.sigma.perm).is_identity());

  const MonodromyResult a5 = monodromy(fixture("a5_10.lp"));
  CHECK(a5.group.order() == 60);
  CHECK(a5.group.is_transitive());
  CHECK(nontrivial_systems(a5.group) == 0);
}

TEST_CASE("monodromy is stable under base point and step changes") {
  for (const char* name : {"e9d8.lp", "a5_10.lp", "t16n195.lp"}) {
    const LaurentPoly p = fixture(name);
    const MonodromyResult ref = monodromy(p);

    MonodromyOptions moved;
    moved.base_angle = 0.41;
    moved.base_radius = 2.5;
    const MonodromyResult a = monodromy(p, moved);

    MonodromyOptions fine;
    fine.numeric.samples_per_quarter = 128;
    const MonodromyResult b = monodromy(p, fine);

    MonodromyOptions threaded;
    threaded.jobs = 3;
    const MonodromyResult c = monodromy(p, threaded);

    for (const MonodromyResult* r : {&a, &b, &c}) {
      CHECK(r->group.order() == ref.group.order());
      CHECK(nontrivial_systems(r->group) == nontrivial_systems(ref.group));
      CHECK(loop_shapes(*r) == loop_shapes(ref));
      CHECK(r->sigma.perm.cycle_shape() == ref.sigma.perm.cycle_shape());
    }
    // same base point: identical permutations
    CHECK(b.loops == ref.loops);
    CHECK(c.loops == ref.loops);
    CHECK(b.steps > ref.steps);
  }
}

TEST_CASE("match_fibers rejects ambiguity") {
  const std::vector<Complex> from = {{0, 0}, {1, 0}, {0, 1}};
  const std::vector<Complex> to = {{0, 1.0001}, {0.0001, 0}, {1, 0.0002}};
  CHECK(to_string(match_fibers(from, to, {})) == "(1,2,3)");
  const std::vector<Complex> crowded = {{0, 0}, {0.0001, 0}, {5, 5}};
  CHECK_THROWS_AS(match_fibers(from, crowded, {}), NumericFailure);
  const std::vector<Complex> far = {{0, 1.1}, {0.1, 0}, {1, 0.2}};
  CHECK_THROWS_AS(match_fibers(from, far, {}), NumericFailure);
}

TEST_CASE("cycle sums vanish on solutions") {
  const LaurentPoly p = fixture("e9d8.lp");
  const double big = large_t_threshold(p);
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> ang(0, 6.28), mag(1, 4);
  for (const auto& q : oracle::e9d8_relations().basis()) {
    for (int i = 0; i < 5; ++i) {
      const CycleSum c = cycle_sum(p, q, std::polar(big * mag(rng), ang(rng)));
      CHECK(c.relative() < 1e-6);
    }
  }
  // z^-3 sums over the three small roots without cancelling
  double worst = 0;
  for (int i = 0; i < 5; ++i) worst = std::max(worst, cycle_sum(p, parse_laurent("z^-3"), std::polar(big * mag(rng), ang(rng))).relative());
  CHECK(worst > 1e-2);
}
