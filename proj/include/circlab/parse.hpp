#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "circlab/circulant.hpp"

namespace circlab {

/// Names the token that failed to parse.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string token, const std::string& why)
      : std::runtime_error("invalid token '" + token + "': " + why), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

Int parse_order(std::string_view text);

/// Comma-separated decimals with "a-b" range sugar, e.g. "1,3-5". An empty
/// string is the empty set. Values must lie in [1, n-1] and be distinct.
ConnectionSet parse_connection_set(Int n, std::string_view text);

}  // namespace circlab
