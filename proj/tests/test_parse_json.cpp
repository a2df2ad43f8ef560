#include <doctest.h>

#include "circlab/error.hpp"
#include "circlab/parse.hpp"
#include "circlab/report_json.hpp"

using namespace circlab;

TEST_CASE("parsing connection sets") {
  CHECK(parse_connection_set(9, "1-8").elements() == std::vector<Int>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(parse_connection_set(9, "1, 3-5,8").elements() == std::vector<Int>{1, 3, 4, 5, 8});
  CHECK(parse_connection_set(9, "7,2").elements() == std::vector<Int>{2, 7});
  CHECK(parse_connection_set(9, "").empty());
  CHECK(parse_order(" 12") == 12);
}

TEST_CASE("parse errors name the token") {
  const auto token_of = [](Int n, const char* text) {
    try {
      parse_connection_set(n, text);
    } catch (const ParseError& e) {
      return e.token();
    }
    return std::string("<none>");
  };
  CHECK(token_of(6, "0,1") == "0");
  CHECK(token_of(6, "1,x") == "x");
  CHECK(token_of(6, "1,1") == "1");
  CHECK(token_of(6, "2-7") == "2-7");
  CHECK(token_of(6, "4-2") == "4-2");
  CHECK(token_of(6, "1,") == "");
  CHECK(token_of(6, ",1") == "");
  CHECK(token_of(6, "1.5") == "1.5");
  CHECK_THROWS_AS(parse_order("0"), ParseError);
  CHECK_THROWS_AS(parse_order("abc"), ParseError);
  CHECK_THROWS_AS(parse_order("4294967296"), ParseError);
}

TEST_CASE("group orders in JSON") {
  CHECK(group_order_to_json(720) == 720);
  CHECK(group_order_to_json(factorial(20)).is_number_unsigned());
  CHECK(group_order_to_json(factorial(25)) == "15511210043330985984000000");
  CHECK(group_order_from_json(group_order_to_json(factorial(25))) == factorial(25));
  CHECK(group_order_from_json(nlohmann::ordered_json(12)) == 12);
  CHECK_THROWS_AS(group_order_from_json(nlohmann::ordered_json("12a")), Error);
}

TEST_CASE("report JSON shape") {
  const auto j = to_json(classify(unit_circulant(15)));
  CHECK(j.at("S") == std::vector<Int>{1, 2, 4, 7, 8, 11, 13, 14});
  CHECK(j.at("aut_order") == 720);
  CHECK(j.at("normalizer_order") == 120);
  CHECK(j.at("normal_circulant_oracle") == false);
  CHECK(j.at("decomposition").at("complete_factor_orders") == std::vector<Int>{5});
  CHECK(j.at("decomposition").at("gamma0").at("S") == std::vector<Int>{1, 2});
  CHECK(to_json(classify(make(6, {2, 4}))).at("decomposition").is_null());

  ClassifyOptions tight;
  tight.enumeration_limit = 10;
  CHECK(to_json(classify(complete(5), tight)).at("normal_circulant_oracle") == "partial");
}

TEST_CASE("classification JSON round trip over every instance to 10") {
  for (Int n = 1; n <= 10; ++n) {
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < full; mask += 2) {
      const auto r = classify(CirculantGraph(ConnectionSet::from_mask(n, mask)));
      const auto text = to_json(r).dump();
      REQUIRE(classification_from_json(nlohmann::ordered_json::parse(text)) == r);
    }
  }
}

TEST_CASE("agreement JSON round trip and verdicts") {
  VerifyOptions o;
  o.n_max = 9;
  o.jobs = 1;
  const auto r = verify_range(o);
  const auto j = to_json(r);
  CHECK(j.at("verdicts").at("T1.1") == "vindicated");
  CHECK(j.at("verdicts").at("C1.5") == "refuted");
  CHECK(j.at("verdicts").size() == r.tallies.size());
  CHECK(agreement_from_json(nlohmann::ordered_json::parse(j.dump())) == r);
}
