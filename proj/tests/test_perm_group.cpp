#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "circlab/error.hpp"
#include "circlab/group.hpp"
#include "circlab/perm.hpp"

using namespace circlab;

namespace {

Permutation reflection(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>((n - x) % n);
  return Permutation(img);
}

Permutation transposition(std::size_t n, Point a, Point b) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
  return Permutation(img);
}

std::set<std::vector<Point>> all_elements(const GroupHandle& g) {
  std::set<std::vector<Point>> out;
  g.for_each_element(1'000'000, [&](std::span<const Point> p) {
    out.emplace(p.begin(), p.end());
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto r = Permutation::rotation(5, 2);
  CHECK(r(4) == 1);
  CHECK(Permutation::rotation(5, -1)(0) == 4);
  CHECK(compose(r, r.inverse()).is_identity());
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK(Permutation::rotation(4, 1).to_cycle_string() == "(0 1 2 3)");
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), ContractViolation);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), ContractViolation);
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), Error);
}

TEST_CASE("compose applies the right factor first") {
  const auto a = Permutation::rotation(6, 1);
  const auto b = reflection(6);
  const auto ab = compose(a, b);
  for (Point x = 0; x < 6; ++x) CHECK(ab(x) == a(b(x)));
  const auto c = conjugate(b, a);
  for (Point x = 0; x < 6; ++x) CHECK(c(x) == b(a(b.inverse()(x))));
  CHECK(c == Permutation::rotation(6, -1));
}

TEST_CASE("orbits") {
  const std::vector<Permutation> rot{Permutation::rotation(6, 1)};
  CHECK(orbit(0, rot, 6) == std::vector<Point>{0, 1, 2, 3, 4, 5});
  CHECK(orbit(0, {}, 6) == std::vector<Point>{0});
  const std::vector<Permutation> two{Permutation::rotation(6, 2)};
  CHECK(orbit(1, two, 6) == std::vector<Point>{1, 3, 5});
  CHECK_THROWS_AS(orbit(0, rot, 5), Error);
}

TEST_CASE("stabilizer chain orders") {
  const std::vector<Permutation> sym4{Permutation::rotation(4, 1), transposition(4, 0, 1)};
  CHECK(stabilizer_chain(4, sym4).order() == 24);
  const std::vector<Permutation> z6{Permutation::rotation(6, 1)};
  CHECK(stabilizer_chain(6, z6).order() == 6);
  const std::vector<Permutation> d8{Permutation::rotation(8, 1), reflection(8)};
  CHECK(stabilizer_chain(8, d8).order() == 16);
  CHECK(stabilizer_chain(5, {}).order() == 1);
  const std::vector<Permutation> sym10{Permutation::rotation(10, 1), transposition(10, 0, 1)};
  CHECK(stabilizer_chain(10, sym10).order() == factorial(10));
}

TEST_CASE("dihedral group of order 16 by exhaustive enumeration") {
  const std::vector<Permutation> d8{Permutation::rotation(8, 1), reflection(8)};
  const auto g = stabilizer_chain(8, d8);
  const auto elements = all_elements(g);
  CHECK(elements.size() == 16);
  std::set<std::vector<Point>> expected;
  for (int k = 0; k < 8; ++k) {
    std::vector<Point> rot(8), ref(8);
    for (int x = 0; x < 8; ++x) {
      rot[static_cast<std::size_t>(x)] = static_cast<Point>((x + k) % 8);
      ref[static_cast<std::size_t>(x)] = static_cast<Point>(((k - x) % 8 + 8) % 8);
    }
    expected.insert(rot);
    expected.insert(ref);
  }
  CHECK(elements == expected);
}

TEST_CASE("membership") {
  const std::vector<Permutation> d8{Permutation::rotation(8, 1), reflection(8)};
  const auto g = stabilizer_chain(8, d8);
  CHECK(g.contains(Permutation::rotation(8, 3)));
  CHECK(g.contains(compose(reflection(8), Permutation::rotation(8, 5))));
  CHECK_FALSE(g.contains(transposition(8, 0, 1)));
  CHECK(g.basic_orbit(0).size() == 8);
}

TEST_CASE("enumeration guard") {
  const std::vector<Permutation> sym10{Permutation::rotation(10, 1), transposition(10, 0, 1)};
  const auto g = stabilizer_chain(10, sym10);
  try {
    g.for_each_element(1000, [](std::span<const Point>) { return true; });
    FAIL("expected oracle too large");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::oracle_too_large);
  }
  int seen = 0;
  stabilizer_chain(4, std::vector<Permutation>{Permutation::rotation(4, 1), transposition(4, 0, 1)})
      .for_each_element(100, [&](std::span<const Point>) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("random generating sets agree with their closure") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 5);
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(n - (trial % 3)), rng);
      gens.emplace_back(img);
    }
    const auto id = Permutation::identity(n);
    std::set<std::vector<Point>> closure{std::vector<Point>(id.images().begin(), id.images().end())};
    std::vector<std::vector<Point>> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<std::vector<Point>> next;
      for (const auto& e : frontier) {
        for (const auto& g : gens) {
          const auto p = compose(g, Permutation(e));
          std::vector<Point> v(p.images().begin(), p.images().end());
          if (closure.insert(v).second) next.push_back(v);
        }
      }
      frontier = std::move(next);
    }
    const auto h = stabilizer_chain(n, gens);
    REQUIRE(h.order() == closure.size());
    REQUIRE(all_elements(h) == closure);
  }
}

TEST_CASE("group order formatting") {
  CHECK(to_string(GroupOrder{0}) == "0");
  CHECK(to_string(factorial(20)) == "2432902008176640000");
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
  CHECK_THROWS_AS(factorial(35), ContractViolation);
}
