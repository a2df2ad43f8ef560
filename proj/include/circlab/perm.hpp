#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace circlab {

using Point = std::int32_t;

/// Bijection on {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ContractViolation unless img is a bijection.
  explicit Permutation(std::vector<Point> img);

  static Permutation identity(std::size_t degree);
  /// x -> x + shift mod degree.
  static Permutation rotation(std::size_t degree, std::int64_t shift);

  std::size_t degree() const noexcept { return img_.size(); }
  Point operator()(Point x) const { return img_[static_cast<std::size_t>(x)]; }
  std::span<const Point> images() const noexcept { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Cycle decomposition text such as "(0 1 2)(3 4)", "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> img_;
};

/// x -> a(b(x)): apply b first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// a o b o a^-1.
Permutation conjugate(const Permutation& a, const Permutation& b);

/// Orbit of point under the group generated by gens, ascending. degree is
/// needed when gens is empty.
std::vector<Point> orbit(Point point, std::span<const Permutation> gens, std::size_t degree);

}  // namespace circlab
