#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentlab/exact/linalg.hpp"
#include "momentlab/laurent/laurent_poly.hpp"

namespace momentlab {

/// Exponent interval [lo, hi] of candidate Q's.
struct Window {
  int lo = 0;
  int hi = 0;

  int width() const noexcept { return hi - lo; }
  Eigen::Index size() const noexcept { return hi - lo + 1; }
  bool contains(int e) const noexcept { return lo <= e && e <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Smallest window holding every exponent of q and 0.
Window window_of(const LaurentPoly& q);

/// K = (v-1)(hi-lo) + 1: deg Q is read as the window width.
unsigned moment_bound(int v, const Window& window);

/// Rows k = 0..K, column e - lo holds moment(P, z^e, k).
struct MomentSystem {
  LaurentPoly p;
  Window window;
  unsigned K = 0;
  MatrixX<QuadScalar> matrix;

  static MomentSystem build(const LaurentPoly& p, const Window& window, unsigned K);
};

/// Subspace of Laurent polynomials supported on a window, kept in reduced
/// echelon form over the coordinates a_lo, ..., a_hi.
class SolutionSpace {
 public:
  SolutionSpace() = default;
  SolutionSpace(Window window, Subspace<QuadScalar> space);

  static SolutionSpace constants(const Window& window);
  static SolutionSpace spanned_by(const Window& window, const std::vector<LaurentPoly>& polys);

  const Window& window() const noexcept { return window_; }
  const Subspace<QuadScalar>& space() const noexcept { return space_; }
  Eigen::Index dim() const noexcept { return space_.dim(); }
  /// Echelon rows as polynomials.
  std::vector<LaurentPoly> basis() const;
  bool contains(const LaurentPoly& q) const;

  SolutionSpace sum(const SolutionSpace& other) const;
  SolutionSpace intersect(const SolutionSpace& other) const;

  friend bool operator==(const SolutionSpace&, const SolutionSpace&) = default;

 private:
  Window window_;
  Subspace<QuadScalar> space_;
};

/// Extra linear constraints a_e = 0 for the listed exponents.
struct SolveOptions {
  std::vector<int> zero_exponents;
  std::optional<unsigned> K;  // overrides moment_bound(v, window)
};

SolutionSpace solve_moment_space(const LaurentPoly& p, const Window& window, int v,
                                 const SolveOptions& options = {});

struct Verification {
  bool ok = true;
  unsigned K = 0;
  std::optional<unsigned> first_failure;  // least k with a nonzero moment
};

/// moment(P, Q, k) = 0 for k = 0..K.
Verification verify_solution(const LaurentPoly& p, const LaurentPoly& q, unsigned K);
/// Uses K = moment_bound(v, window_of(q)).
Verification verify_solution_v(const LaurentPoly& p, const LaurentPoly& q, int v);

struct ReductionChain {
  std::vector<PowerReduction> steps;  // one prime l per step
  LaurentPoly p;                      // terminal P, power_substitution(p) <= 1
  LaurentPoly q;                      // terminal Q
};

/// Peels off z^l one prime at a time until P is no longer a polynomial in z^l.
ReductionChain b_reduce(const LaurentPoly& p, const LaurentPoly& q = LaurentPoly());

/// P = outer(W).
struct Decomposition {
  LaurentPoly outer;
  LaurentPoly inner;
};

/// Checks compose_outer(outer, inner) == p; throws std::invalid_argument otherwise.
void verify_decomposition(const LaurentPoly& p, const Decomposition& d);

/// Largest i with the exponents of inner^i inside the window.
int composition_cap(const LaurentPoly& inner, const Window& window);

/// Span of inner_j^i, i <= cap_j, cut down to polynomials supported on the
/// window. Missing caps default to composition_cap; constants are included.
SolutionSpace composition_space(const LaurentPoly& p, const std::vector<Decomposition>& decomps,
                                const Window& window, const std::vector<int>& caps = {});

/// Solutions produced by the two classical mechanisms: constants,
/// compositions through the given decompositions and, when P = P~(z^l),
/// monomials z^e with l not dividing e plus pullbacks of the explained
/// space of P~.
SolutionSpace explained_space(const LaurentPoly& p, const Window& window,
                              const std::vector<Decomposition>& decomps = {});

/// dim(full) - dim(full cap (explained + constants)).
Eigen::Index classify_exceptional(const SolutionSpace& full, const SolutionSpace& explained);

}  // namespace momentlab
