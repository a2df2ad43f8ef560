#include "circlab/perm.hpp"

#include <algorithm>
#include <sstream>

#include "circlab/error.hpp"

namespace circlab {

namespace {

void check_degrees(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::degree_mismatch,
                std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  }
}

}  // namespace

Permutation::Permutation(std::vector<Point> img) : img_(std::move(img)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point x : img_) {
    if (x < 0 || static_cast<std::size_t>(x) >= img_.size() || seen[static_cast<std::size_t>(x)]) {
      throw ContractViolation("image array is not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.img_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.img_[i] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::rotation(std::size_t degree, std::int64_t shift) {
  Permutation p;
  p.img_.resize(degree);
  const auto n = static_cast<std::int64_t>(degree);
  for (std::int64_t i = 0; i < n; ++i) {
    p.img_[static_cast<std::size_t>(i)] = static_cast<Point>((((i + shift) % n) + n) % n);
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<Point>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i])] = static_cast<Point>(i);
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<Point>(i)) continue;
    any = true;
    os << '(';
    std::size_t x = i;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      os << (first ? "" : " ") << x;
      first = false;
      x = static_cast<std::size_t>(img_[x]);
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  check_degrees(a, b);
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(b(static_cast<Point>(i)));
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) { return p.inverse(); }

Permutation conjugate(const Permutation& a, const Permutation& b) {
  return compose(compose(a, b), a.inverse());
}

std::vector<Point> orbit(Point point, std::span<const Permutation> gens, std::size_t degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw Error(ErrorCode::degree_mismatch, "generator degree");
  }
  if (point < 0 || static_cast<std::size_t>(point) >= degree) {
    throw ContractViolation("orbit: point out of range");
  }
  std::vector<char> seen(degree, 0);
  std::vector<Point> queue{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      const Point y = g(queue[head]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace circlab
