#include "momentlab/numeric/fiber.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "momentlab/errors.hpp"

namespace momentlab {

NumericLaurent::NumericLaurent(const LaurentPoly& p) {
  low = p.min_exponent();
  coeffs.assign(static_cast<std::size_t>(p.max_exponent() - low + 1), Complex{});
  for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e - low)] = c.to_complex();
}

Complex NumericLaurent::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc * std::pow(z, low);
}

Complex NumericLaurent::derivative(Complex z) const {
  Complex acc{};
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * z + static_cast<double>(low + static_cast<int>(i)) * coeffs[i];
  }
  return acc * std::pow(z, low - 1);
}

double NumericLaurent::magnitude(Complex z) const {
  const double r = std::abs(z);
  double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc * std::pow(r, low);
}

double NumericLaurent::max_coeff() const {
  double best = 0;
  for (const auto& c : coeffs) best = std::max(best, std::abs(c));
  return best;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& c) {
  std::size_t deg = c.size();
  while (deg > 0 && c[deg - 1] == Complex{}) --deg;
  if (deg < 2) return {};
  --deg;
  // z = rho * w evens out the two ends of the coefficient range
  const double rho = std::pow(std::abs(c[0]) > 0 ? std::abs(c[0]) / std::abs(c[deg]) : 1.0, 1.0 / deg);
  const double scale = rho > 0 && std::isfinite(rho) ? rho : 1.0;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) {
    companion(i, deg - 1) = -c[i] * std::pow(scale, static_cast<double>(i)) / (c[deg] * std::pow(scale, static_cast<double>(deg)));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericFailure("companion eigenvalues did not converge");
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i) * scale);
  return out;
}

namespace {

std::vector<Complex> newton_polygon_start(const std::vector<Complex>& c) {
  const std::size_t deg = c.size() - 1;
  // upper convex hull of (k, log|c_k|)
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= deg; ++k) {
    if (c[k] == Complex{}) continue;
    auto lg = [&](std::size_t i) { return std::log(std::abs(c[i])); };
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull.back();
      const double cross = (static_cast<double>(b) - a) * (lg(k) - lg(a)) - (lg(b) - lg(a)) * (static_cast<double>(k) - a);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<Complex> out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const std::size_t len = hull[i + 1] - hull[i];
    const double r = std::pow(std::abs(c[hull[i]]) / std::abs(c[hull[i + 1]]), 1.0 / static_cast<double>(len));
    for (std::size_t j = 0; j < len; ++j) {
      out.push_back(std::polar(r, 2 * std::numbers::pi * (static_cast<double>(j) + 0.25) / static_cast<double>(len) + 0.7 * static_cast<double>(i)));
    }
  }
  return out;
}

std::vector<Complex> aberth_roots(const std::vector<Complex>& c, std::vector<Complex> z) {
  const std::size_t deg = c.size() - 1;
  for (int iter = 0; iter < 1000; ++iter) {
    bool moved = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex f = c[deg], d{};
      for (std::size_t k = deg; k-- > 0;) {
        d = d * z[i] + f;
        f = f * z[i] + c[k];
      }
      if (f == Complex{}) continue;
      const Complex ratio = f / d;
      Complex repel{};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) repel += 1.0 / (z[i] - z[j]);
      }
      const Complex w = ratio / (1.0 - ratio * repel);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      if (std::abs(w) > 1e-15 * std::abs(z[i])) moved = true;
    }
    if (!moved) break;
  }
  return z;
}

}  // namespace

bool polish_root(const NumericLaurent& p, Complex t, Complex& z, const NumericConfig& config) {
  for (int iter = 0; iter < 100; ++iter) {
    const Complex f = p(z) - t;
    const double scale = p.magnitude(z) + std::abs(t);
    if (std::abs(f) <= config.residual_tol * scale) return true;
    const Complex d = p.derivative(z);
    if (d == Complex{}) return false;
    const Complex step = f / d;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || z == Complex{}) return false;
    if (std::abs(step) <= 1e-15 * std::abs(z)) {
      return std::abs(p(z) - t) <= config.residual_tol * (p.magnitude(z) + std::abs(t)) * 10;
    }
  }
  return false;
}

Fiber fiber_roots(const NumericLaurent& p, Complex t, const NumericConfig& config) {
  if (p.n() < 1 || p.m() < 1) throw std::invalid_argument("fiber roots need a proper Laurent polynomial");
  std::vector<Complex> c = p.coeffs;  // z^m (P - t)
  c[static_cast<std::size_t>(p.m())] -= t;
  std::size_t lead = c.size() - 1;
  while (lead > 0 && c[lead] == Complex{}) --lead;
  c.resize(lead + 1);
  Fiber fiber{t, aberth_roots(c, newton_polygon_start(c))};
  if (fiber.roots.size() != static_cast<std::size_t>(p.n() + p.m())) throw NumericFailure("lost roots in the fiber");
  for (auto& z : fiber.roots) {
    if (!polish_root(p, t, z, config)) throw NumericFailure("Newton polish missed the residual bound");
  }
  for (std::size_t i = 0; i < fiber.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < fiber.roots.size(); ++j) {
      if (std::abs(fiber.roots[i] - fiber.roots[j]) <= 1e-12 * (1 + std::abs(fiber.roots[i]))) {
        throw NumericFailure("fiber roots collided; t may be a critical value");
      }
    }
  }
  return fiber;
}

Fiber fiber_roots(const LaurentPoly& p, Complex t, const NumericConfig& config) {
  if (!p.is_proper()) throw std::invalid_argument("fiber roots need a proper Laurent polynomial");
  return fiber_roots(NumericLaurent(p), t, config);
}

double large_t_threshold(const LaurentPoly& p, const NumericConfig& config) {
  const double a = NumericLaurent(p).max_coeff();
  return config.large_t_factor * (1 + a) * (1 + a);
}

InfinitySplit classify_at_infinity(const LaurentPoly& p, Complex t, const NumericConfig& config) {
  const int n = p.n();
  auto roots = fiber_roots(p, t, config).roots;
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return std::abs(a) > std::abs(b); });
  const double inner = std::abs(roots[static_cast<std::size_t>(n - 1)]);
  const double outer = std::abs(roots[static_cast<std::size_t>(n)]);
  if (!(inner > 10 * outer)) {
    throw NumericFailure("|t| too small to separate the roots near infinity from those near zero");
  }
  return {{roots.begin(), roots.begin() + n}, {roots.begin() + n, roots.end()}};
}

CycleSum cycle_sum(const LaurentPoly& p, const LaurentPoly& q, Complex t, const NumericConfig& config) {
  const InfinitySplit split = classify_at_infinity(p, t, config);
  const NumericLaurent nq(q);
  const double n = p.n();
  const double m = p.m();
  CycleSum out;
  for (Complex z : split.near_infinity) {
    out.value += m * nq(z);
    out.scale += m * nq.magnitude(z);
  }
  for (Complex z : split.near_zero) {
    out.value -= n * nq(z);
    out.scale += n * nq.magnitude(z);
  }
  return out;
}

namespace {

// Single-linkage clusters of `pts` under |a - b| <= tol(a, b).
template <typename Close>
std::vector<std::vector<std::size_t>> clusters(const std::vector<Complex>& pts, Close close) {
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (close(pts[i], pts[j])) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<long> slot(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return out;
}

}  // namespace

CriticalData critical_data(const LaurentPoly& p, const NumericConfig& config) {
  if (!p.is_proper()) throw std::invalid_argument("critical data needs a proper Laurent polynomial");
  const NumericLaurent np(p);
  // z^(m+1) P'(z) = sum k a_k z^(k+m)
  std::vector<Complex> c(np.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<double>(np.low + static_cast<int>(i)) * np.coeffs[i];
  const std::vector<Complex> points = polynomial_roots(c);

  std::vector<Complex> values;
  double vmax = 0;
  for (Complex w : points) {
    values.push_back(np(w));
    vmax = std::max(vmax, std::abs(values.back()));
  }
  const double vtol = config.cluster_tol * (1 + vmax);
  const auto groups = clusters(values, [&](Complex a, Complex b) { return std::abs(a - b) <= vtol; });

  CriticalData out;
  for (const auto& g : groups) {
    CriticalValue cv;
    std::vector<Complex> pts;
    for (std::size_t i : g) {
      cv.value += values[i];
      pts.push_back(points[i]);
    }
    cv.value /= static_cast<double>(g.size());
    const auto by_point = clusters(pts, [&](Complex a, Complex b) {
      return std::abs(a - b) <= config.position_tol * (1 + std::max(std::abs(a), std::abs(b)));
    });
    int used = 0;
    for (const auto& bp : by_point) {
      Complex centre{};
      for (std::size_t i : bp) centre += pts[i];
      cv.points.push_back(centre / static_cast<double>(bp.size()));
      cv.shape.push_back(static_cast<int>(bp.size()) + 1);
      used += static_cast<int>(bp.size()) + 1;
    }
    for (; used < np.n() + np.m(); ++used) cv.shape.push_back(1);
    std::sort(cv.shape.rbegin(), cv.shape.rend());
    out.values.push_back(std::move(cv));
  }
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    for (std::size_t j = i + 1; j < out.values.size(); ++j) {
      if (std::abs(out.values[i].value - out.values[j].value) <= 10 * vtol) {
        throw NumericFailure("critical values too close to cluster reliably");
      }
    }
  }
  std::sort(out.values.begin(), out.values.end(), [](const CriticalValue& a, const CriticalValue& b) {
    const double aa = std::arg(a.value), ab = std::arg(b.value);
    if (aa != ab) return aa < ab;
    return std::abs(a.value) < std::abs(b.value);
  });
  return out;
}

}  // namespace momentlab
