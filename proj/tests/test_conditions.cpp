#include <catch_amalgamated.hpp>

#include "momentlab/conditions/conditions.hpp"
#include "momentlab/survey/catalog.hpp"

using namespace momentlab;

namespace {

Permutation P(const char* s, std::size_t n) { return parse_permutation(s, n); }

// Span of the whole orbit of v0 under coordinate permutation.
SubspaceBasis orbit_span(const PermGroup& g, const SigmaInfinity& s) {
  const std::size_t n = g.degree();
  const auto first = s.perm.cycles(true).front();
  VectorX<Rational> v0(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v0(static_cast<Eigen::Index>(i)) = Rational(-s.n);
  for (Point p : first) v0(p) = Rational(s.m);
  SubspaceBasis out(static_cast<Eigen::Index>(n));
  for (const auto& h : g.elements(1'000'000)) {
    VectorX<Rational> w(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) w(h(static_cast<Point>(i))) = v0(static_cast<Eigen::Index>(i));
    out.insert(w);
  }
  return out;
}

PermGroup wreath_fixture() {
  // preserves {1,3},{2,4},{5,6}
  return PermGroup(6, {P("(1,2,3,4)(5,6)", 6), P("(1,5)(3,6)", 6), P("(1,3)", 6)});
}

PermGroup psl25() { return PermGroup(6, {P("(1,2,3,4,5)", 6), P("(1,6)(2,5)", 6)}); }

}  // namespace

TEST_CASE("V equals the span of the full orbit") {
  for (const PermGroup& g : {a5_on_pairs(), affine_e9_d8(), wreath_fixture(), psl25()}) {
    for (const auto& s : sigma_candidates(g)) CHECK(build_V(g, s) == orbit_span(g, s));
  }
}

TEST_CASE("W is spanned by the non-trivial blocks through 0") {
  const SubspaceBasis w = build_W(wreath_fixture());
  CHECK(w.dim() == 2);  // {1,3} and the whole set
  CHECK(build_W(psl25()).dim() == 1);
}

TEST_CASE("A5(10) and E9:D8 fail both conditions") {
  for (const PermGroup& g : {a5_on_pairs(), affine_e9_d8()}) {
    const auto sigmas = sigma_candidates(g);
    REQUIRE(sigmas.size() == 2);
    for (const auto& s : sigmas) {
      const ConditionReport r = check_conditions(g, s);
      CHECK_FALSE(r.b_star);
      CHECK_FALSE(r.c_star);
      CHECK_FALSE(r.b_witness);
    }
  }
  const ConditionReport r = check_conditions(a5_on_pairs(), sigma_candidates(a5_on_pairs()).front(), "T10n7");
  CHECK(r.dim_v == 5);
  CHECK(r.dim_w == 1);
  CHECK(r.dim_vw == 6);
}

TEST_CASE("wreath fixture satisfies B*") {
  const PermGroup g = wreath_fixture();
  const auto s = SigmaInfinity::from_permutation(P("(1,2,3,4)(5,6)", 6));
  const auto witness = check_B_star(g, s);
  REQUIRE(witness);
  CHECK(*witness == PointSet{0, 2});
  const ConditionReport r = check_conditions(g, s);
  CHECK(r.b_star);
  CHECK(r.b_witness == PointSet{0, 2});
}

TEST_CASE("2-transitive fixture satisfies C*") {
  const PermGroup g = psl25();
  const auto sigmas = sigma_candidates(g);
  REQUIRE_FALSE(sigmas.empty());
  for (const auto& s : sigmas) {
    CHECK(check_C_star(g, s));
    CHECK_FALSE(check_B_star(g, s));
  }
}

TEST_CASE("witness is reported in the original labelling") {
  // same wreath group with points shuffled by (1,6,2)
  const Permutation shuffle = P("(1,6,2)", 6);
  const PermGroup base = wreath_fixture();
  std::vector<Permutation> gens;
  for (const auto& x : base.generators()) gens.push_back(x.conjugate_by(shuffle));
  const PermGroup g(6, gens);
  const auto s = SigmaInfinity::from_permutation(P("(1,2,3,4)(5,6)", 6).conjugate_by(shuffle));
  const ConditionReport r = check_conditions(g, s);
  REQUIRE(r.b_star);
  REQUIRE(r.b_witness);
  CHECK(is_block(g, *r.b_witness));
  const auto first = s.perm.cycles(true).front();
  for (Point p : *r.b_witness) CHECK(std::find(first.begin(), first.end(), p) != first.end());
}

TEST_CASE("block system types") {
  const PermGroup g(8, {P("(1,2,3,4)(5,6,7,8)", 8), P("(1,5)(2,6)(3,7)(4,8)", 8)});
  const auto s = SigmaInfinity::standard(4, 4);
  for (const auto& sys : all_block_systems(g)) {
    if (sys.is_trivial(8)) continue;
    const SystemType t = classify_system(s, sys);
    const PointSet& b0 = sys.blocks.front();
    if (b0 == PointSet{0, 4}) CHECK(t == SystemType{SystemType::Kind::b, 4, 0});
    if (b0 == PointSet{0, 2}) CHECK(t == SystemType{SystemType::Kind::a, 2, 0});
  }
  BlockSystem bogus{{{0, 1}, {2, 3}, {4, 5}, {6, 7}}};
  CHECK_THROWS_AS(classify_system(s, bogus), std::invalid_argument);
}

TEST_CASE("condition reports round-trip through JSON") {
  const PermGroup g = wreath_fixture();
  for (const auto& s : sigma_candidates(g)) {
    const ConditionReport r = check_conditions(g, s, "wreath");
    const auto j = to_json(r);
    CHECK(condition_report_from_json(j) == r);
    CHECK(j.at("sigma").get<std::string>() == to_string(s.perm));
  }
}
