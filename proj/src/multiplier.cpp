#include "circlab/multiplier.hpp"

#include <algorithm>

#include "circlab/error.hpp"

namespace circlab {

Multiplier::Multiplier(Int modulus, Int unit) : modulus_(modulus), unit_(mod(unit, modulus)) {
  if (gcd(unit_, modulus_) != 1) {
    throw Error(ErrorCode::not_a_unit,
                std::to_string(unit) + " is not a unit mod " + std::to_string(modulus));
  }
}

Residue Multiplier::operator()(const Residue& r) const {
  if (r.modulus() != modulus_) throw ContractViolation("multiplier applied across moduli");
  return Residue((*this)(r.value()), modulus_);
}

std::vector<Int> units(Int n) {
  std::vector<Int> out;
  for (Int k = 1; k <= n; ++k) {
    if (gcd(k, n) == 1) out.push_back(k % n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConnectionSet scale(const ConnectionSet& s, Int k) {
  const Int n = s.modulus();
  std::vector<Int> img;
  img.reserve(s.size());
  for (Int x : s.elements()) img.push_back(x * mod(k, n) % n);
  return ConnectionSet(n, std::move(img));
}

bool MultiplierSet::contains(Int k) const {
  return std::binary_search(units_.begin(), units_.end(), mod(k, modulus_));
}

std::vector<Int> MultiplierSet::orbit(Int x) const {
  std::vector<Int> out;
  for (Int k : units_) out.push_back(mod(x, modulus_) * k % modulus_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultiplierSet aut_c_s(const CirculantGraph& g) {
  const Int n = g.order();
  const auto& s = g.connection_set();
  std::vector<Int> fixing;
  for (Int k : units(n)) {
    const bool preserves = std::all_of(s.elements().begin(), s.elements().end(),
                                       [&](Int x) { return s.contains(x * k % n); });
    if (preserves) fixing.push_back(k);
  }
  return MultiplierSet(n, std::move(fixing));
}

bool is_transitive_on_s(const MultiplierSet& ms, const ConnectionSet& s) {
  if (s.empty()) throw ContractViolation("transitivity on an empty connection set");
  // The multiplier set is a group, so its orbits are the sets k * x.
  return ms.orbit(s.elements().front()) == s.elements();
}

bool is_regular_on_s(const MultiplierSet& ms, const ConnectionSet& s) {
  return is_transitive_on_s(ms, s) && ms.size() == s.size();
}

Int normalizer_order(const CirculantGraph& g) {
  return g.order() * static_cast<Int>(aut_c_s(g).size());
}

Multiplier lift_through_quotient(Int n, Int m, Int k_bar) {
  if (m < 1 || n % m != 0) {
    throw Error(ErrorCode::invalid_divisor, std::to_string(m) + " does not divide " + std::to_string(n));
  }
  if (prime_set(m) != prime_set(n)) {
    throw Error(ErrorCode::hypothesis_violation, "prime divisors of " + std::to_string(m) +
                                                     " and " + std::to_string(n) + " differ");
  }
  if (gcd(mod(k_bar, m), m) != 1) {
    throw Error(ErrorCode::not_a_unit, std::to_string(k_bar) + " is not a unit mod " + std::to_string(m));
  }
  for (Int k = mod(k_bar, m); k < n + m; k += m) {
    if (gcd(k, n) == 1) return Multiplier(n, k);
  }
  throw Error(ErrorCode::internal_consistency, "no lift found");
}

ConnectionSet multiplier_canonical(const ConnectionSet& s) {
  ConnectionSet best = s;
  for (Int k : units(s.modulus())) {
    auto candidate = scale(s, k);
    if (candidate.elements() < best.elements()) best = std::move(candidate);
  }
  return best;
}

}  // namespace circlab
