#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circlab/perm.hpp"

namespace circlab {

/// Group orders up to 34! fit; enough for degrees this library targets.
using GroupOrder = unsigned __int128;

std::string to_string(GroupOrder value);
GroupOrder factorial(unsigned k);

/// Stabilizer chain over the fixed base 0, 1, ..., degree-1 built with the
/// deterministic Schreier-Sims procedure. Level i holds a transversal of the
/// orbit of point i under the pointwise stabilizer of 0..i-1.
class GroupHandle {
 public:
  GroupHandle(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  GroupOrder order() const noexcept { return order_; }
  bool contains(const Permutation& p) const;

  /// Orbit of point i under the stabilizer of 0..i-1.
  std::vector<Point> basic_orbit(std::size_t level) const;

  /// Visits the image array of every element once; stops early when visit
  /// returns false. Throws oracle_too_large when the order exceeds limit.
  void for_each_element(GroupOrder limit,
                        const std::function<bool(std::span<const Point>)>& visit) const;

 private:
  bool sift(std::size_t level, Permutation g) const;
  void add_generator(std::size_t level, const Permutation& g);
  void extend_orbit(std::size_t level, const Permutation& g);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<std::vector<Permutation>> strong_gens_;
  std::vector<std::vector<std::optional<Permutation>>> transversal_;
  GroupOrder order_ = 1;
};

GroupHandle stabilizer_chain(std::size_t degree, std::span<const Permutation> generators);

}  // namespace circlab
