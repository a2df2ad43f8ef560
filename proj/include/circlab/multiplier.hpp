#pragma once

#include <vector>

#include "circlab/circulant.hpp"
#include "circlab/cyclic.hpp"

namespace circlab {

/// Automorphism x -> kx of Z_n (gcd(k, n) = 1).
class Multiplier {
 public:
  Multiplier(Int modulus, Int unit);

  Int modulus() const noexcept { return modulus_; }
  Int unit() const noexcept { return unit_; }
  Int operator()(Int x) const { return mod(x, modulus_) * unit_ % modulus_; }
  Residue operator()(const Residue& r) const;

  friend bool operator==(const Multiplier&, const Multiplier&) = default;

 private:
  Int modulus_;
  Int unit_;
};

std::vector<Int> units(Int n);

/// The image k * S as a connection set.
ConnectionSet scale(const ConnectionSet& s, Int k);

/// Aut(Z_n, S): the units fixing S setwise, ascending.
class MultiplierSet {
 public:
  MultiplierSet(Int modulus, std::vector<Int> units) : modulus_(modulus), units_(std::move(units)) {}

  Int modulus() const noexcept { return modulus_; }
  const std::vector<Int>& units() const noexcept { return units_; }
  std::size_t size() const noexcept { return units_.size(); }
  bool contains(Int k) const;

  /// Orbit of x under the multipliers, ascending.
  std::vector<Int> orbit(Int x) const;

 private:
  Int modulus_;
  std::vector<Int> units_;
};

MultiplierSet aut_c_s(const CirculantGraph& g);

bool is_transitive_on_s(const MultiplierSet& ms, const ConnectionSet& s);
bool is_regular_on_s(const MultiplierSet& ms, const ConnectionSet& s);

/// Order of the normalizer C : Aut(C,S) of the translations, n * |Aut(C,S)|.
Int normalizer_order(const CirculantGraph& g);

/// Smallest unit k mod n reducing to k_bar mod m, for a quotient by a
/// subgroup of the Frattini subgroup (same prime divisors for m and n).
Multiplier lift_through_quotient(Int n, Int m, Int k_bar);

/// Lexicographically least connection set among all k * S (the
/// representative of the multiplier-equivalence class).
ConnectionSet multiplier_canonical(const ConnectionSet& s);

}  // namespace circlab
