#include "momentlab/solver/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace momentlab {

Window window_of(const LaurentPoly& q) {
  return {std::min(q.min_exponent(), 0), std::max(q.max_exponent(), 0)};
}

unsigned moment_bound(int v, const Window& window) {
  if (v < 1) throw std::invalid_argument("v must be at least 1");
  if (window.hi < window.lo) throw std::invalid_argument("empty exponent window");
  return static_cast<unsigned>(v - 1) * static_cast<unsigned>(window.width()) + 1;
}

MomentSystem MomentSystem::build(const LaurentPoly& p, const Window& window, unsigned K) {
  return {p, window, K, moment_matrix(p, window.lo, window.hi, K)};
}

SolutionSpace::SolutionSpace(Window window, Subspace<QuadScalar> space)
    : window_(window), space_(std::move(space)) {
  if (space_.ambient_dim() != window_.size()) throw std::invalid_argument("subspace does not match window");
}

SolutionSpace SolutionSpace::constants(const Window& window) {
  return spanned_by(window, {LaurentPoly(1)});
}

SolutionSpace SolutionSpace::spanned_by(const Window& window, const std::vector<LaurentPoly>& polys) {
  Subspace<QuadScalar> s(window.size());
  for (const auto& q : polys) {
    if (!q.is_zero() && (!window.contains(q.min_exponent()) || !window.contains(q.max_exponent()))) {
      throw std::invalid_argument("polynomial " + to_string(q) + " leaves the window");
    }
    s.insert(q.dense(window.lo, window.hi));
  }
  return {window, std::move(s)};
}

std::vector<LaurentPoly> SolutionSpace::basis() const {
  std::vector<LaurentPoly> out;
  for (Eigen::Index i = 0; i < space_.dim(); ++i) {
    out.push_back(LaurentPoly::from_dense(window_.lo, space_.rows().row(i).transpose()));
  }
  return out;
}

bool SolutionSpace::contains(const LaurentPoly& q) const {
  if (!q.is_zero() && (!window_.contains(q.min_exponent()) || !window_.contains(q.max_exponent()))) {
    return false;
  }
  return space_.contains(q.dense(window_.lo, window_.hi));
}

SolutionSpace SolutionSpace::sum(const SolutionSpace& other) const {
  if (!(other.window_ == window_)) throw std::invalid_argument("window mismatch");
  return {window_, space_.sum(other.space_)};
}

SolutionSpace SolutionSpace::intersect(const SolutionSpace& other) const {
  if (!(other.window_ == window_)) throw std::invalid_argument("window mismatch");
  return {window_, momentlab::intersect(space_, other.space_)};
}

SolutionSpace solve_moment_space(const LaurentPoly& p, const Window& window, int v,
                                 const SolveOptions& options) {
  const unsigned K = options.K ? *options.K : moment_bound(v, window);
  // Rows are fed one at a time so that only the echelon basis is kept.
  Subspace<QuadScalar> rows(window.size());
  LaurentPoly pk(1);
  VectorX<QuadScalar> row(window.size());
  for (unsigned k = 0; k <= K && rows.dim() < window.size(); ++k) {
    for (int e = window.lo; e <= window.hi; ++e) {
      const QuadScalar c = e == 0 ? QuadScalar() : pk.coeff(-e);
      row(e - window.lo) = c.is_zero() ? c : QuadScalar(static_cast<long>(e)) * c;
    }
    rows.insert(row);
    if (k < K) pk *= p;
  }
  for (int e : options.zero_exponents) {
    if (!window.contains(e)) throw std::invalid_argument("constrained exponent outside the window");
    VectorX<QuadScalar> unit = VectorX<QuadScalar>::Zero(window.size());
    unit(e - window.lo) = QuadScalar(1);
    rows.insert(unit);
  }
  const MatrixX<QuadScalar> kernel = nullspace<QuadScalar>(rows.rows());
  Subspace<QuadScalar> space(window.size());
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) space.insert(kernel.col(c));
  return {window, std::move(space)};
}

Verification verify_solution(const LaurentPoly& p, const LaurentPoly& q, unsigned K) {
  Verification out;
  out.K = K;
  const auto terms = q.terms();
  LaurentPoly pk(1);
  for (unsigned k = 0; k <= K; ++k) {
    QuadScalar total;
    for (const auto& [e, c] : terms) {
      if (e == 0) continue;
      const QuadScalar pc = pk.coeff(-e);
      if (!pc.is_zero()) total += QuadScalar(static_cast<long>(e)) * c * pc;
    }
    if (!total.is_zero()) {
      out.ok = false;
      out.first_failure = k;
      return out;
    }
    if (k < K) pk *= p;
  }
  return out;
}

Verification verify_solution_v(const LaurentPoly& p, const LaurentPoly& q, int v) {
  return verify_solution(p, q, moment_bound(v, window_of(q)));
}

namespace {

int smallest_prime_factor(int l) {
  for (int f = 2; f * f <= l; ++f) {
    if (l % f == 0) return f;
  }
  return l;
}

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

ReductionChain b_reduce(const LaurentPoly& p, const LaurentPoly& q) {
  ReductionChain chain;
  chain.p = p;
  chain.q = q;
  while (true) {
    const int l = power_substitution(chain.p);
    if (l <= 1) break;
    PowerReduction step = reduce_by_power(chain.p, chain.q, smallest_prime_factor(l));
    chain.p = step.p;
    chain.q = step.q;
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

void verify_decomposition(const LaurentPoly& p, const Decomposition& d) {
  if (compose_outer(d.outer, d.inner) != p) {
    throw std::invalid_argument("outer(" + to_string(d.inner) + ") does not reproduce P");
  }
}

int composition_cap(const LaurentPoly& inner, const Window& window) {
  if (inner.is_zero() || inner.is_constant()) return 0;
  int cap = 0;
  while (true) {
    const long next = cap + 1;
    if (next * inner.max_exponent() > window.hi || next * inner.min_exponent() < window.lo) break;
    ++cap;
  }
  return cap;
}

SolutionSpace composition_space(const LaurentPoly& p, const std::vector<Decomposition>& decomps,
                                const Window& window, const std::vector<int>& caps) {
  SolutionSpace out = SolutionSpace::constants(window);
  for (std::size_t j = 0; j < decomps.size(); ++j) {
    const Decomposition& d = decomps[j];
    verify_decomposition(p, d);
    const int fits = composition_cap(d.inner, window);
    const int cap = j < caps.size() ? std::min(caps[j], fits) : fits;
    // The top and bottom exponents of inner^i are not cancelled by lower
    // powers, so powers beyond `fits` never combine into the window.
    std::vector<LaurentPoly> powers;
    LaurentPoly w(1);
    for (int i = 1; i <= cap; ++i) {
      w *= d.inner;
      powers.push_back(w);
    }
    out = out.sum(SolutionSpace::spanned_by(window, powers));
  }
  return out;
}

SolutionSpace explained_space(const LaurentPoly& p, const Window& window,
                              const std::vector<Decomposition>& decomps) {
  SolutionSpace out = composition_space(p, decomps, window);
  const int l = power_substitution(p);
  if (l <= 1) return out;
  std::vector<LaurentPoly> extra;
  for (int e = window.lo; e <= window.hi; ++e) {
    if (e % l != 0) extra.push_back(LaurentPoly::monomial(QuadScalar(1), e));
  }
  const PowerReduction red = reduce_by_power(p, LaurentPoly(), l);
  const Window reduced{ceil_div(window.lo, l), floor_div(window.hi, l)};
  for (const auto& q : explained_space(red.p, reduced).basis()) extra.push_back(substitute_power(q, l));
  return out.sum(SolutionSpace::spanned_by(window, extra));
}

Eigen::Index classify_exceptional(const SolutionSpace& full, const SolutionSpace& explained) {
  if (!(full.window() == explained.window())) throw std::invalid_argument("window mismatch");
  const SolutionSpace covered = explained.sum(SolutionSpace::constants(full.window()));
  return full.dim() - full.intersect(covered).dim();
}

}  // namespace momentlab
