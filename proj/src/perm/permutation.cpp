#include "momentlab/perm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "momentlab/errors.hpp"

namespace momentlab {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) throw std::invalid_argument("permutation degree exceeds 255");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) throw std::invalid_argument("images do not form a bijection");
    seen[p] = true;
  }
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  Permutation out(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int p = cycle[i];
      if (p < 0 || static_cast<std::size_t>(p) >= degree) {
        throw std::invalid_argument("cycle point " + std::to_string(p + 1) + " outside degree " +
                                    std::to_string(degree));
      }
      if (used[static_cast<std::size_t>(p)]) {
        throw std::invalid_argument("point " + std::to_string(p + 1) + " repeated in cycles");
      }
      used[static_cast<std::size_t>(p)] = true;
      out.images_[static_cast<std::size_t>(p)] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation out;
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.images_.size(); ++i) out.images_[i] = b.images_[a.images_[i]];
  return out;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  if (g.degree() != degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[g.images_[i]] = g.images_[images_[i]];
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    Point p = static_cast<Point>(start);
    while (!seen[p]) {
      seen[p] = true;
      cycle.push_back(p);
      p = images_[p];
    }
    if (cycle.size() > 1 || include_fixed) out.push_back(std::move(cycle));
  }
  return out;
}

CycleShape Permutation::cycle_shape() const {
  CycleShape shape;
  for (const auto& c : cycles(true)) shape.push_back(static_cast<int>(c.size()));
  std::sort(shape.begin(), shape.end(), std::greater<>());
  return shape;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, c.size());
  return result;
}

int defect(const CycleShape& shape) {
  int n = 0;
  for (int part : shape) n += part;
  return n - static_cast<int>(shape.size());
}

std::string to_string(const Permutation& p) {
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(static_cast<int>(c[i]) + 1);
    }
    out += ")";
  }
  return out;
}

std::string shape_to_string(const CycleShape& shape) {
  std::string out;
  for (int part : shape) out += "(" + std::to_string(part) + ")";
  return out;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  int max_point = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected a point in permutation '" + std::string(text) + "'");
      const int point = std::stoi(std::string(text.substr(start, pos - start)));
      if (point < 1) throw ParseError("points are numbered from 1 in '" + std::string(text) + "'");
      max_point = std::max(max_point, point);
      cycle.push_back(point - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("unterminated cycle in permutation '" + std::string(text) + "'");
    }
    cycles.push_back(std::move(cycle));
  }
  if (degree == 0) degree = static_cast<std::size_t>(max_point);
  if (static_cast<std::size_t>(max_point) > degree) {
    throw ParseError("point " + std::to_string(max_point) + " exceeds degree " + std::to_string(degree));
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

}  // namespace momentlab
