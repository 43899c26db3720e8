#include "momentlab/numeric/monodromy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "momentlab/errors.hpp"

namespace momentlab {

namespace {

double nearest_other(const std::vector<Complex>& roots, std::size_t i) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (j != i) best = std::min(best, std::abs(roots[i] - roots[j]));
  }
  return best;
}

double segment_distance(Complex a, Complex b, Complex c) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double s = len2 > 0 ? std::real((c - a) * std::conj(ab)) / len2 : 0;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(a + s * ab - c);
}

}  // namespace

std::vector<Complex> track_fiber(const NumericLaurent& p, const std::vector<Complex>& start,
                                 const std::function<Complex(double)>& path, const NumericConfig& config,
                                 std::size_t& steps) {
  std::vector<Complex> roots = start;
  const double h0 = 1.0 / (4.0 * config.samples_per_quarter);
  double s = 0, h = h0;
  int halvings = 0;
  while (s < 1) {
    const double s_next = std::min(1.0, s + h);
    const Complex t = path(s_next);
    std::vector<Complex> next = roots;
    bool ok = true;
    for (std::size_t i = 0; i < next.size() && ok; ++i) {
      ok = polish_root(p, t, next[i], config) &&
           std::abs(next[i] - roots[i]) <= config.step_safety * nearest_other(roots, i);
    }
    if (!ok) {
      if (++halvings > config.max_halvings) throw NumericFailure("path continuation failed after repeated step halving");
      h /= 2;
      continue;
    }
    roots = std::move(next);
    s = s_next;
    ++steps;
    halvings = 0;
    h = std::min(2 * h, 4 * h0);
  }
  return roots;
}

Permutation match_fibers(const std::vector<Complex>& from, const std::vector<Complex>& to,
                         const NumericConfig& config) {
  std::vector<Point> images(from.size());
  std::vector<bool> used(to.size(), false);
  for (std::size_t i = 0; i < from.size(); ++i) {
    std::size_t best = 0;
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    for (std::size_t j = 0; j < to.size(); ++j) {
      const double d = std::abs(from[i] - to[j]);
      if (d < d1) {
        d2 = d1;
        d1 = d;
        best = j;
      } else if (d < d2) {
        d2 = d;
      }
    }
    if (used[best] || d1 > config.match_tol * (1 + std::abs(to[best])) || d2 <= 10 * d1) {
      throw NumericFailure("ambiguous root matching at the end of a loop");
    }
    used[best] = true;
    images[i] = static_cast<Point>(best);
  }
  return Permutation::from_images(images);
}

MonodromyResult monodromy(const LaurentPoly& p, const MonodromyOptions& options) {
  if (!p.is_proper()) throw std::invalid_argument("monodromy needs a proper Laurent polynomial");
  if (p.n() + p.m() > static_cast<int>(kMaxDegree)) throw std::invalid_argument("degree too large");
  const NumericConfig& cfg = options.numeric;
  const NumericLaurent np(p);
  MonodromyResult out;
  out.critical = critical_data(p, cfg);
  auto& values = out.critical.values;
  if (values.empty()) throw NumericFailure("no critical values");

  double vmax = 0;
  for (const auto& v : values) vmax = std::max(vmax, std::abs(v.value));
  const double radius = options.base_radius * (1 + vmax);

  // Base point whose segments to the critical values keep the most clearance.
  double best_clear = -1;
  for (int k = 0; k < 16; ++k) {
    const Complex t0 = std::polar(radius, options.base_angle + 0.61 * k);
    double clear = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (i != j) clear = std::min(clear, segment_distance(t0, values[i].value, values[j].value));
      }
    }
    if (clear > best_clear) {
      best_clear = clear;
      out.base = t0;
    }
  }
  const Complex t0 = out.base;

  // Loop order: decreasing argument of (t0 - c) / t0, so the product is the big counterclockwise circle.
  std::stable_sort(values.begin(), values.end(), [&](const CriticalValue& a, const CriticalValue& b) {
    return std::arg((t0 - a.value) / t0) > std::arg((t0 - b.value) / t0);
  });

  auto fiber = fiber_roots(np, t0, cfg).roots;
  std::sort(fiber.begin(), fiber.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return std::arg(a) < std::arg(b);
  });
  out.base_fiber = fiber;

  std::vector<double> rho(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    double gap = std::abs(values[i].value - t0);
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j != i) gap = std::min({gap, std::abs(values[i].value - values[j].value), best_clear});
    }
    rho[i] = gap / 3;
  }

  out.loops.resize(values.size());
  std::vector<std::size_t> steps(values.size() + 1, 0);
  std::vector<std::string> errors(values.size() + 1);

  auto run_loop = [&](std::size_t i) {
    try {
      if (i == values.size()) {
        const double r = std::abs(t0), a0 = std::arg(t0);
        auto end = track_fiber(np, fiber, [&](double s) {
          return std::polar(r, a0 + 2 * std::numbers::pi * s);
        }, cfg, steps[i]);
        out.big_circle = match_fibers(fiber, end, cfg);
        return;
      }
      const Complex c = values[i].value;
      const Complex u = (t0 - c) / std::abs(t0 - c);
      const Complex a = c + rho[i] * u;
      auto z = track_fiber(np, fiber, [&](double s) { return t0 + s * (a - t0); }, cfg, steps[i]);
      z = track_fiber(np, z, [&](double s) {
        return c + rho[i] * u * std::polar(1.0, 2 * std::numbers::pi * s);
      }, cfg, steps[i]);
      z = track_fiber(np, z, [&](double s) { return a + s * (t0 - a); }, cfg, steps[i]);
      out.loops[i] = match_fibers(fiber, z, cfg);
    } catch (const NumericFailure& e) {
      errors[i] = e.what();
    }
  };

  const std::size_t tasks = values.size() + 1;
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) run_loop(i);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw NumericFailure(e);
  }
  for (auto s : steps) out.steps += s;

  const std::size_t degree = fiber.size();
  Permutation product(degree);
  for (const auto& g : out.loops) product = product * g;
  if (product != out.big_circle) {
    throw NumericFailure("loop product disagrees with the continuation around a large circle");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (out.loops[i].cycle_shape() != values[i].shape) {
      throw NumericFailure("loop around critical value " + std::to_string(i) + " has the wrong cycle shape");
    }
  }
  out.sigma = SigmaInfinity::from_permutation(product.inverse());
  if (out.sigma.n != p.n() || out.sigma.m != p.m()) {
    throw NumericFailure("sigma_infinity does not have cycle type (n, m)");
  }
  out.group = PermGroup(degree, out.loops);
  return out;
}

}  // namespace momentlab
