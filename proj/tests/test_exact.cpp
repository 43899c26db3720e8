#include <catch_amalgamated.hpp>

#include <random>

#include "momentlab/errors.hpp"
#include "momentlab/exact/linalg.hpp"
#include "momentlab/exact/scalar_io.hpp"

using namespace momentlab;

namespace {

// Fraction-free elimination on integers; rank only.
long bareiss_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

MatrixX<Rational> random_matrix(std::mt19937& rng, int rows, int cols, int rank_cap) {
  std::uniform_int_distribution<int> d(-4, 4);
  MatrixX<Rational> left(rows, rank_cap), right(rank_cap, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rank_cap; ++j) left(i, j) = d(rng);
  for (int i = 0; i < rank_cap; ++i)
    for (int j = 0; j < cols; ++j) right(i, j) = Rational(d(rng), 1 + (rng() % 3));
  return left * right;
}

}  // namespace

TEST_CASE("rational scalars parse and print exactly") {
  for (const char* s : {"0", "-7", "3/4", "-22/7", "(1+1*sqrt(5))", "(-39603/2+17711/2*sqrt(5))", "(0+1*sqrt(-1))"}) {
    const QuadScalar x = parse_scalar(s);
    CHECK(parse_scalar(to_string(x)) == x);
  }
  CHECK(parse_scalar("( 1 + 2 * sqrt( 2 ) )") == QuadScalar(1, 2, 2));
  CHECK(parse_scalar("6/4") == QuadScalar(Rational(3, 2)));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS(parse_scalar("(1+sqrt(4))"));
  CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
}

TEST_CASE("quadratic field arithmetic against the quadratic formula") {
  // (1 + sqrt 5)/2 is a root of x^2 - x - 1
  const QuadScalar phi(Rational(1, 2), Rational(1, 2), 5);
  CHECK(phi * phi - phi - QuadScalar(1) == QuadScalar());
  CHECK(phi * phi.inverse() == QuadScalar(1));
  CHECK(phi.norm() == Rational(-1));
  CHECK((phi * phi.conjugate()).is_rational());

  // both roots of 2x^2 - 6x + 1: (3 +- sqrt 7)/2
  for (int sign : {1, -1}) {
    const QuadScalar x(Rational(3, 2), Rational(sign, 2), 7);
    CHECK(QuadScalar(2) * x * x - QuadScalar(6) * x + QuadScalar(1) == QuadScalar());
  }

  const QuadScalar i = QuadScalar::sqrt_of(-1);
  CHECK(i * i == QuadScalar(-1));
  CHECK(i.to_complex() == std::complex<double>(0, 1));

  CHECK_THROWS_AS(QuadScalar::sqrt_of(2) + QuadScalar::sqrt_of(3), std::invalid_argument);
  CHECK_THROWS_AS(QuadScalar(0).inverse(), std::domain_error);
  CHECK((QuadScalar::sqrt_of(2) + QuadScalar(1)).radicand() == 2);
}

TEST_CASE("embedding avoids cancellation") {
  // 768398401 - 543339720 sqrt 2 is about 6.5e-10
  const QuadScalar x = parse_scalar("(768398401-543339720*sqrt(2))");
  const double v = x.to_complex().real();
  CHECK(v > 0);
  CHECK(v == Catch::Approx(1.0 / (768398401.0 + 543339720.0 * std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("rref rank matches fraction-free elimination") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 2 + trial % 5, cols = 3 + trial % 4, cap = 1 + trial % 4;
    MatrixX<Rational> m = random_matrix(rng, rows, cols, cap);
    // clear denominators for the integer oracle
    Integer lcm = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) lcm = boost::multiprecision::lcm(lcm, denominator(m(i, j)));
    std::vector<std::vector<Integer>> ints(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) ints[i][j] = numerator(m(i, j) * Rational(lcm));
    CHECK(rank<Rational>(m) == bareiss_rank(ints));
  }
}

TEST_CASE("nullspace residuals are exactly zero") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const MatrixX<Rational> m = random_matrix(rng, 3 + trial % 3, 6, 1 + trial % 3);
    const MatrixX<Rational> n = nullspace<Rational>(m);
    CHECK(n.cols() + rank<Rational>(m) == m.cols());
    const MatrixX<Rational> prod = m * n;
    for (Eigen::Index i = 0; i < prod.rows(); ++i)
      for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    const auto e = rref<Rational>(m);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) CHECK(e.rows(static_cast<Eigen::Index>(k), e.pivots[k]) == 1);
  }
}

TEST_CASE("nullspace over Q(sqrt 2)") {
  const QuadScalar s = QuadScalar::sqrt_of(2);
  MatrixX<QuadScalar> m(2, 3);
  m << QuadScalar(1), s, QuadScalar(2), s, QuadScalar(2), s * QuadScalar(2);
  const MatrixX<QuadScalar> n = nullspace<QuadScalar>(m);
  CHECK(n.cols() == 2);
  const MatrixX<QuadScalar> prod = m * n;
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(is_zero(prod(i, j)));
}

TEST_CASE("subspace operations") {
  MatrixX<Rational> a(2, 4), b(2, 4);
  a << 1, 0, 0, 0, 0, 1, 0, 0;
  b << 0, 1, 0, 0, 0, 0, 1, 0;
  const auto x = SubspaceBasis::span(a), y = SubspaceBasis::span(b);
  CHECK(x.sum(y).dim() == 3);
  const auto meet = intersect(x, y);
  REQUIRE(meet.dim() == 1);
  VectorX<Rational> e1 = VectorX<Rational>::Zero(4);
  e1(1) = 5;
  CHECK(meet.contains(e1));
  // the dimension formula
  CHECK(x.dim() + y.dim() == x.sum(y).dim() + meet.dim());
  SubspaceBasis z(4);
  CHECK(z.insert(e1));
  CHECK_FALSE(z.insert(e1));
  CHECK(x.contains(z));
}
