#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace momentlab {

/// Points are 0-based in the API; the cycle-notation text format is 1-based.
using Point = std::uint8_t;
inline constexpr std::size_t kMaxDegree = 255;

/// Cycle lengths in non-increasing order, fixed points included as 1's.
using CycleShape = std::vector<int>;

/// Bijection of {0, ..., N-1}. Products compose left to right:
/// (a * b)(i) = b(a(i)), matching the path order of loops.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// `images[i]` is the image of point i; throws unless it is a bijection.
  static Permutation from_images(std::vector<Point> images);
  /// Cycles given in 0-based points; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const noexcept { return images_[p]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// g^-1 * this * g: if this maps i to j, the result maps g(i) to g(j).
  Permutation conjugate_by(const Permutation& g) const;

  /// Disjoint cycles, each starting at its smallest point, ordered by that
  /// point. Fixed points are included only on request.
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;
  CycleShape cycle_shape() const;
  std::size_t order() const;

  /// Compact byte string usable as a hash key.
  std::string key() const { return std::string(images_.begin(), images_.end()); }

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  std::vector<Point> images_;
};

/// Defect N - (number of cycles): the local Riemann-Hurwitz contribution.
int defect(const CycleShape& shape);

/// `(1,2,3,6,8)(4,9,7,5,10)`; the identity prints as `()`.
std::string to_string(const Permutation& p);
/// Parses cycle notation. With degree 0 the degree is the largest point.
Permutation parse_permutation(std::string_view text, std::size_t degree = 0);
std::string shape_to_string(const CycleShape& shape);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace momentlab

template <>
struct std::hash<momentlab::Permutation> {
  std::size_t operator()(const momentlab::Permutation& p) const noexcept {
    return std::hash<std::string>{}(p.key());
  }
};
