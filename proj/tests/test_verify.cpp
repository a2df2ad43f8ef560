#include <doctest.h>

#include <algorithm>
#include <set>

#include "circlab/automorphism.hpp"
#include "circlab/error.hpp"
#include "circlab/multiplier.hpp"
#include "circlab/verify.hpp"

using namespace circlab;

namespace {

bool lists(const Tally& t, Int n, const std::vector<Int>& s) {
  return std::any_of(t.counterexamples.begin(), t.counterexamples.end(),
                     [&](const Counterexample& c) { return c.n == n && c.s == s; });
}

VerifyOptions opts(Int n_max, bool at_only = false, unsigned jobs = 1) {
  VerifyOptions o;
  o.n_max = n_max;
  o.arc_transitive_only = at_only;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST_CASE("enumeration picks one connected set per multiplier class") {
  for (Int n = 2; n <= 12; ++n) {
    std::set<std::vector<Int>> classes;
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 2; mask < full; mask += 2) {
      const auto s = ConnectionSet::from_mask(n, mask);
      if (is_connected(CirculantGraph(s))) classes.insert(multiplier_canonical(s).elements());
    }
    const auto listed = enumerate_connection_sets(n);
    std::set<std::vector<Int>> got;
    for (const auto& s : listed) got.insert(s.elements());
    REQUIRE(got.size() == listed.size());
    REQUIRE(got == classes);
  }
  CHECK_THROWS_AS(enumerate_connection_sets(1), Error);
  CHECK_THROWS_AS(enumerate_connection_sets(33), Error);
}

TEST_CASE("arc invariant filter never rejects an arc-transitive instance") {
  for (Int n = 2; n <= 12; ++n) {
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 2; mask < full; mask += 2) {
      const CirculantGraph g(ConnectionSet::from_mask(n, mask));
      if (is_arc_transitive(g)) REQUIRE(passes_arc_invariant_filter(g.connection_set()));
    }
  }
  CHECK_FALSE(passes_arc_invariant_filter(ConnectionSet(6, {1, 2})));
}

TEST_CASE("full-order tally is clean to 8") {
  const auto r = verify_range(opts(8));
  const auto& t = r.tally("T1.1");
  CHECK(t.checked > 0);
  CHECK(t.agreements == t.checked);
  CHECK(t.counterexamples.empty());
  CHECK(r.instances.size() == 7);
}

TEST_CASE("the 8-cycle is listed by the prime-power audit") {
  const auto r = verify_range(opts(9));
  CHECK(lists(r.tally("C1.5"), 8, {1, 7}));
  CHECK(lists(r.tally("C1.5-noncomplete"), 8, {1, 7}));
  for (const auto& c : r.tally("C1.5-noncomplete").counterexamples) CHECK(c.evidence.at("p") == 2);
}

TEST_CASE("arc-transitive sweep to 15 adjudicates the coset readings") {
  const auto r = verify_range(opts(15, true));
  const std::vector<Int> u15{1, 2, 4, 7, 8, 11, 13, 14};
  const auto& literal = r.tally("T1.4-literal");
  REQUIRE(lists(literal, 15, u15));
  const auto it = std::find_if(literal.counterexamples.begin(), literal.counterexamples.end(),
                               [&](const Counterexample& c) { return c.n == 15 && c.s == u15; });
  CHECK(it->evidence.at("aut_order") == 720);
  CHECK(it->evidence.at("normalizer_order") == 120);
  CHECK_FALSE(lists(r.tally("T1.4-extended"), 15, u15));
  CHECK(r.tally("T1.1").counterexamples.empty());
}

TEST_CASE("arc-transitive mode matches the full sweep on arc-transitive tallies") {
  const auto full = verify_range(opts(10));
  const auto at = verify_range(opts(10, true));
  for (const char* name : {"T1.1", "T1.4-literal", "T1.4-extended", "key-0", "wreath-order", "decomposition-roundtrip"}) {
    CHECK(full.tally(name) == at.tally(name));
  }
}

TEST_CASE("results do not depend on the worker count") {
  CHECK(verify_range(opts(10, false, 1)) == verify_range(opts(10, false, 3)));
}

TEST_CASE("guards") {
  for (Int bad : {2, 17, 40}) {
    try {
      verify_range(opts(bad));
      FAIL("expected guard exceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::guard_exceeded);
    }
  }
  auto o = opts(8);
  o.prime_power_max = 32;
  CHECK_THROWS_AS(verify_range(o), Error);
}

TEST_CASE("tally bookkeeping") {
  Tally t{"x", "claim", 0, 0, {}};
  CHECK(t.agreement_percent() == 100.0);
  t.record(true, 3, {1}, {});
  t.record(false, 4, {1, 3}, {{"k", 1}});
  CHECK(t.checked == 2);
  CHECK(t.agreements == 1);
  CHECK(t.agreement_percent() == 50.0);
  CHECK(t.counterexamples.size() == 1);
  AgreementReport r;
  CHECK_THROWS_AS(r.tally("missing"), ContractViolation);
}
