#include "circlab/parse.hpp"

#include <charconv>
#include <set>

namespace circlab {

namespace {

Int parse_int(std::string_view token, std::string_view whole) {
  Int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(std::string(whole), "not a decimal integer");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Int parse_order(std::string_view text) {
  const Int n = parse_int(trim(text), text);
  if (n < 1 || n > kMaxModulus) throw ParseError(std::string(text), "order out of range");
  return n;
}

ConnectionSet parse_connection_set(Int n, std::string_view text) {
  std::set<Int> values;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (token.empty()) throw ParseError("", "empty element");

    Int lo = 0, hi = 0;
    const auto dash = token.find('-', 1);
    if (dash == std::string_view::npos) {
      lo = hi = parse_int(token, token);
    } else {
      lo = parse_int(trim(token.substr(0, dash)), token);
      hi = parse_int(trim(token.substr(dash + 1)), token);
      if (hi < lo) throw ParseError(std::string(token), "empty range");
    }
    for (Int x = lo; x <= hi; ++x) {
      if (x < 1 || x >= n) {
        throw ParseError(std::string(token), "element " + std::to_string(x) + " not in [1, " +
                                                 std::to_string(n - 1) + "]");
      }
      if (!values.insert(x).second) throw ParseError(std::string(token), "repeated element");
    }
    if (comma != std::string_view::npos && text.empty()) throw ParseError("", "trailing comma");
  }
  return ConnectionSet(n, {values.begin(), values.end()});
}

}  // namespace circlab
