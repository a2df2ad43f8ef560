#include <doctest.h>

#include <queue>

#include "circlab/circulant.hpp"
#include "circlab/error.hpp"

using namespace circlab;

namespace {

bool bfs_connected(const CirculantGraph& g) {
  const Int n = g.order();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<Int> q;
  q.push(0);
  seen[0] = true;
  Int reached = 1;
  while (!q.empty()) {
    const Int v = q.front();
    q.pop();
    for (Int s : g.connection_set().elements()) {
      const Int w = mod(v + s, n);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

std::vector<Int> elems(const CirculantGraph& g) { return g.connection_set().elements(); }

}  // namespace

TEST_CASE("constructors") {
  CHECK(elems(complete(4)) == std::vector<Int>{1, 2, 3});
  CHECK(elems(unit_circulant(9)) == std::vector<Int>{1, 2, 4, 5, 7, 8});
  CHECK(elems(cycle(5)) == std::vector<Int>{1, 4});
  CHECK(elems(cycle(2)) == std::vector<Int>{1});
  CHECK(trivial_circulant().order() == 1);
  CHECK(make(5, {3, 1}) == make(5, {1, 3}));
  CHECK(complete(1) == trivial_circulant());
}

TEST_CASE("invalid connection sets") {
  for (const auto& bad : {std::vector<Int>{0, 2}, std::vector<Int>{5}, std::vector<Int>{-1}, std::vector<Int>{2, 2}}) {
    try {
      make(5, bad);
      FAIL("expected invalid connection set");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_connection_set);
    }
  }
  CHECK_THROWS_AS(make(0, {}), Error);
}

TEST_CASE("masks") {
  const auto s = ConnectionSet::from_mask(8, 0b10101010);
  CHECK(s.elements() == std::vector<Int>{1, 3, 5, 7});
  CHECK(s.mask() == 0b10101010);
  CHECK_THROWS_AS(ConnectionSet::from_mask(4, 0b1), Error);
  CHECK_FALSE(ConnectionSet(100, {1, 99}).has_mask());
  CHECK(ConnectionSet(100, {1, 99}).contains(99));
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(make(6, {2, 4})));
  CHECK(is_connected(make(6, {1, 5})));
  CHECK_FALSE(is_connected(make(12, {4, 6})));
  CHECK_FALSE(bfs_connected(make(12, {4, 6})));
  CHECK(is_connected(trivial_circulant()));
  CHECK_FALSE(is_connected(make(3, {})));
}

TEST_CASE("connectivity matches breadth-first search") {
  for (Int n = 1; n <= 12; ++n) {
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < full; mask += 2) {
      const CirculantGraph g(ConnectionSet::from_mask(n, mask));
      REQUIRE(is_connected(g) == bfs_connected(g));
    }
  }
}

TEST_CASE("undirected") {
  CHECK(is_undirected(make(8, {1, 7})));
  CHECK_FALSE(is_undirected(make(3, {1})));
  for (Int n = 1; n <= 10; ++n) CHECK(is_undirected(complete(n)));
}

TEST_CASE("tensor product") {
  CHECK(tensor_product(complete(3), complete(2)) == make(6, {1, 5}));
  CHECK(tensor_product(complete(3), complete(5)) == make(15, {1, 2, 4, 7, 8, 11, 13, 14}));
  CHECK(tensor_product(make(7, {1, 2, 4}), trivial_circulant()) == make(7, {1, 2, 4}));
  CHECK(tensor_product(trivial_circulant(), cycle(5)) == cycle(5));
  const std::vector<CirculantGraph> three{complete(2), complete(3), complete(5)};
  CHECK(tensor_product(three) == unit_circulant(30));
  try {
    tensor_product(complete(2), complete(4));
    FAIL("expected not a circulant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_circulant);
  }
}

TEST_CASE("tensor arcs are pairs of factor arcs") {
  const auto g1 = make(4, {1, 2});
  const auto g2 = make(5, {2, 3, 4});
  const auto t = tensor_product(g1, g2);
  for (Int v = 0; v < 20; ++v) {
    for (Int w = 0; w < 20; ++w) {
      REQUIRE(t.has_arc(v, w) == (g1.has_arc(v % 4, w % 4) && g2.has_arc(v % 5, w % 5)));
    }
  }
}

TEST_CASE("lexicographic blowup") {
  CHECK(lex_blowup(complete(2), 2) == make(4, {1, 3}));
  CHECK(lex_blowup(complete(2), 4) == make(8, {1, 3, 5, 7}));
  CHECK(lex_blowup(make(7, {1, 2, 4}), 1) == make(7, {1, 2, 4}));
  CHECK(lex_blowup(trivial_circulant(), 3) == make(3, {}));
  CHECK_THROWS_AS(lex_blowup(complete(3), 0), ContractViolation);
}

TEST_CASE("translation kernel") {
  CHECK(translation_kernel(make(4, {1, 3})).elements() == std::vector<Int>{0, 2});
  CHECK(translation_kernel(complete(4)).order() == 1);
  CHECK(translation_kernel(make(8, {1, 3, 5, 7})).elements() == std::vector<Int>{0, 2, 4, 6});
  CHECK(translation_kernel(make(5, {})).order() == 5);
}

TEST_CASE("quotient") {
  CHECK(quotient_by(make(4, {1, 3}), subgroup_of_order(4, 2)) == complete(2));
  CHECK(quotient_by(make(8, {1, 3, 5, 7}), subgroup_of_order(8, 4)) == complete(2));
  CHECK(quotient_by(cycle(7), subgroup_of_order(7, 1)) == cycle(7));
  try {
    quotient_by(make(6, {1, 2}), subgroup_of_order(6, 2));
    FAIL("expected invalid quotient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_quotient);
  }
}

TEST_CASE("kernel quotient and blowup invert each other") {
  for (Int n = 1; n <= 14; ++n) {
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < full; mask += 2) {
      const CirculantGraph g(ConnectionSet::from_mask(n, mask));
      const auto k = translation_kernel(g);
      const auto q = quotient_by(g, k);
      REQUIRE(q.order() == n / k.order());
      REQUIRE(lex_blowup(q, k.order()) == g);
      REQUIRE(translation_kernel(q).order() == (g.valency() == 0 ? q.order() : 1));
    }
  }
}

TEST_CASE("exports") {
  CHECK(to_edge_list(make(3, {1})) == "0 1\n1 2\n2 0\n");
  CHECK(to_dot(make(4, {1, 3})) ==
        "graph \"Circ(4,{1,3})\" {\n  0;\n  1;\n  2;\n  3;\n  0 -- 1;\n  0 -- 3;\n  1 -- 2;\n  2 -- 3;\n}\n");
  const auto directed = to_dot(make(3, {1}));
  CHECK(directed.rfind("digraph", 0) == 0);
  CHECK(directed.find("  2 -> 0;") != std::string::npos);
  CHECK(arcs(complete(3)).size() == 6);
}
