#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circlab/cyclic.hpp"

namespace circlab {

/// Sorted, duplicate-free subset of Z_n \ {0}. For n <= 64 the set is
/// mirrored in a bitmask (bit x set iff x in S).
class ConnectionSet {
 public:
  /// Validates and normalizes (sorts); throws invalid_connection_set on 0,
  /// out-of-range, or repeated elements.
  ConnectionSet(Int modulus, std::vector<Int> elements);

  static ConnectionSet from_mask(Int modulus, std::uint64_t mask);

  Int modulus() const noexcept { return modulus_; }
  const std::vector<Int>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(Int x) const;

  bool has_mask() const noexcept { return modulus_ <= 64; }
  std::uint64_t mask() const noexcept { return mask_; }

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
  }

 private:
  ConnectionSet() = default;

  Int modulus_ = 1;
  std::vector<Int> elements_;
  std::uint64_t mask_ = 0;
};

/// Circ(n, S): vertices Z_n, arc v -> w iff (w - v) mod n lies in S.
class CirculantGraph {
 public:
  explicit CirculantGraph(ConnectionSet s) : s_(std::move(s)) {}

  Int order() const noexcept { return s_.modulus(); }
  const ConnectionSet& connection_set() const noexcept { return s_; }
  std::size_t valency() const noexcept { return s_.size(); }
  bool has_arc(Int v, Int w) const { return s_.contains(mod(w - v, order())); }

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  ConnectionSet s_;
};

CirculantGraph make(Int n, std::vector<Int> s);
CirculantGraph complete(Int n);
CirculantGraph cycle(Int n);
CirculantGraph unit_circulant(Int n);
/// K1 = Circ(1, {}).
CirculantGraph trivial_circulant();

bool is_connected(const CirculantGraph& g);
bool is_undirected(const CirculantGraph& g);

/// Direct (tensor) product over coprime orders; connection set is the CRT
/// image of S1 x S2. An order-1 factor acts as the identity.
CirculantGraph tensor_product(const CirculantGraph& g1, const CirculantGraph& g2);
CirculantGraph tensor_product(std::span<const CirculantGraph> factors);

/// Sigma[K_b-bar]: Circ(m*b, {x : x mod m in S}).
CirculantGraph lex_blowup(const CirculantGraph& g, Int b);

/// {h : S + h = S}.
Subgroup translation_kernel(const CirculantGraph& g);

/// Quotient by a subgroup of the translation kernel, labelled through
/// x + K -> x mod (n / |K|).
CirculantGraph quotient_by(const CirculantGraph& g, const Subgroup& k);

/// Arcs (v, w) in ascending lexicographic order.
std::vector<std::pair<Int, Int>> arcs(const CirculantGraph& g);

/// "v w\n" per arc; for undirected graphs every arc is still listed.
std::string to_edge_list(const CirculantGraph& g);
/// Graphviz text. Undirected graphs emit each edge once with v < w.
std::string to_dot(const CirculantGraph& g);

}  // namespace circlab
