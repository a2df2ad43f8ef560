#include "circlab/group.hpp"

#include <algorithm>

#include "circlab/error.hpp"

namespace circlab {

std::string to_string(GroupOrder value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

GroupOrder factorial(unsigned k) {
  if (k > 34) throw ContractViolation("factorial overflow: " + std::to_string(k));
  GroupOrder f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

GroupHandle::GroupHandle(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree),
      strong_gens_(degree),
      transversal_(degree, std::vector<std::optional<Permutation>>(degree)) {
  for (std::size_t i = 0; i < degree; ++i) transversal_[i][i] = Permutation::identity(degree);
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::degree_mismatch,
                  "generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                      std::to_string(degree));
    }
    if (g.is_identity()) continue;
    generators_.push_back(g);
    add_generator(0, g);
  }
  for (std::size_t i = 0; i < degree; ++i) order_ *= basic_orbit(i).size();
}

bool GroupHandle::sift(std::size_t level, Permutation g) const {
  for (std::size_t k = level; k < degree_; ++k) {
    const auto j = static_cast<std::size_t>(g(static_cast<Point>(k)));
    const auto& t = transversal_[k][j];
    if (!t) return false;
    g = compose(t->inverse(), g);
  }
  return true;
}

bool GroupHandle::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(0, p);
}

void GroupHandle::add_generator(std::size_t level, const Permutation& g) {
  if (level >= degree_ || sift(level, g)) return;
  strong_gens_[level].push_back(g);
  // Snapshot: extend_orbit may grow the transversal while we iterate.
  std::vector<Permutation> reps;
  for (const auto& t : transversal_[level]) {
    if (t) reps.push_back(*t);
  }
  for (const auto& t : reps) extend_orbit(level, compose(g, t));
}

void GroupHandle::extend_orbit(std::size_t level, const Permutation& g) {
  const auto j = static_cast<std::size_t>(g(static_cast<Point>(level)));
  if (const auto& t = transversal_[level][j]) {
    add_generator(level + 1, compose(t->inverse(), g));
    return;
  }
  transversal_[level][j] = g;
  const std::vector<Permutation> gens = strong_gens_[level];
  for (const auto& h : gens) extend_orbit(level, compose(h, g));
}

std::vector<Point> GroupHandle::basic_orbit(std::size_t level) const {
  std::vector<Point> out;
  for (std::size_t j = 0; j < degree_; ++j) {
    if (transversal_[level][j]) out.push_back(static_cast<Point>(j));
  }
  return out;
}

void GroupHandle::for_each_element(GroupOrder limit,
                                   const std::function<bool(std::span<const Point>)>& visit) const {
  if (order_ > limit) {
    throw Error(ErrorCode::oracle_too_large,
                "group order " + to_string(order_) + " exceeds " + to_string(limit));
  }
  std::vector<std::vector<const Permutation*>> levels;
  for (std::size_t i = 0; i < degree_; ++i) {
    std::vector<const Permutation*> reps;
    for (const auto& t : transversal_[i]) {
      if (t) reps.push_back(&*t);
    }
    if (reps.size() > 1) levels.push_back(std::move(reps));
  }
  // prefix[k] = t_0 o t_1 o ... o t_{k-1}; every element factors uniquely so.
  std::vector<std::vector<Point>> prefix(levels.size() + 1, std::vector<Point>(degree_));
  for (std::size_t x = 0; x < degree_; ++x) prefix[0][x] = static_cast<Point>(x);
  std::vector<std::size_t> choice(levels.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == levels.size()) {
      if (!visit(prefix[depth])) return;
      if (depth == 0) return;
      --depth;
      ++choice[depth];
      continue;
    }
    if (choice[depth] == levels[depth].size()) {
      choice[depth] = 0;
      if (depth == 0) return;
      --depth;
      ++choice[depth];
      continue;
    }
    const Permutation& t = *levels[depth][choice[depth]];
    for (std::size_t x = 0; x < degree_; ++x) prefix[depth + 1][x] = prefix[depth][static_cast<std::size_t>(t(static_cast<Point>(x)))];
    ++depth;
  }
}

GroupHandle stabilizer_chain(std::size_t degree, std::span<const Permutation> generators) {
  return GroupHandle(degree, generators);
}

}  // namespace circlab
