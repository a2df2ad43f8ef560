#include "circlab/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "circlab/error.hpp"

namespace circlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_divisor: return "invalid-divisor";
    case ErrorCode::invalid_frame: return "invalid-frame";
    case ErrorCode::invalid_connection_set: return "invalid-connection-set";
    case ErrorCode::not_a_circulant: return "not-a-circulant";
    case ErrorCode::invalid_quotient: return "invalid-quotient";
    case ErrorCode::degree_mismatch: return "degree-mismatch";
    case ErrorCode::undefined_arc_transitivity: return "undefined-arc-transitivity";
    case ErrorCode::oracle_too_large: return "oracle-too-large";
    case ErrorCode::hypothesis_violation: return "hypothesis-violation";
    case ErrorCode::not_a_unit: return "not-a-unit";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::internal_consistency: return "internal-consistency";
    case ErrorCode::guard_exceeded: return "guard-exceeded";
  }
  return "unknown";
}

namespace {

void check_modulus(Int n) {
  if (n < 1 || n > kMaxModulus) {
    throw ContractViolation("modulus out of range: " + std::to_string(n));
  }
}

// Inverse of a modulo m, assuming gcd(a, m) = 1.
Int inverse_mod(Int a, Int m) {
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return mod(old_s, m);
}

}  // namespace

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int mod(Int x, Int n) {
  Int r = x % n;
  return r < 0 ? r + n : r;
}

Residue::Residue(Int value, Int modulus) : value_(0), modulus_(modulus) {
  check_modulus(modulus);
  value_ = mod(value, modulus);
}

void Residue::check_same_modulus(const Residue& other) const {
  if (modulus_ != other.modulus_) {
    throw ContractViolation("mixed moduli " + std::to_string(modulus_) + " and " +
                            std::to_string(other.modulus_));
  }
}

Residue Residue::operator+(const Residue& other) const {
  check_same_modulus(other);
  return Residue(value_ + other.value_, modulus_);
}

Residue Residue::operator-(const Residue& other) const {
  check_same_modulus(other);
  return Residue(value_ - other.value_, modulus_);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

Residue Residue::operator*(Int k) const { return Residue(mod(k, modulus_) * value_, modulus_); }

Int element_order(const Residue& r) { return r.modulus() / gcd(r.value(), r.modulus()); }

Int euler_phi(Int n) {
  check_modulus(n);
  Int result = n;
  for (Int p : prime_set(n)) result = result / p * (p - 1);
  return result;
}

Factorization::Factorization(Int n) : n_(n) {
  check_modulus(n);
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    terms_.push_back({p, e});
  }
  if (rest > 1) terms_.push_back({rest, 1});
}

std::vector<Int> Factorization::primes() const {
  std::vector<Int> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.prime);
  return out;
}

Int Factorization::radical() const {
  Int r = 1;
  for (const auto& t : terms_) r *= t.prime;
  return r;
}

Factorization factorize(Int n) { return Factorization(n); }

std::vector<Int> prime_set(Int n) { return Factorization(n).primes(); }

bool is_prime(Int n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.terms().size() == 1 && f.terms()[0].exponent == 1;
}

bool is_prime_power(Int n) { return n >= 2 && factorize(n).terms().size() == 1; }

std::vector<Int> divisors(Int n) {
  check_modulus(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Subgroup::Subgroup(Int modulus, Int order) : modulus_(modulus), order_(order) {
  check_modulus(modulus);
  if (order < 1 || modulus % order != 0) {
    throw Error(ErrorCode::invalid_divisor,
                std::to_string(order) + " does not divide " + std::to_string(modulus));
  }
}

bool Subgroup::contains(Int x) const { return mod(x, modulus_) % step() == 0; }

std::vector<Int> Subgroup::elements() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (Int k = 0; k < order_; ++k) out.push_back(k * step());
  return out;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return modulus_ == other.modulus_ && other.order_ % order_ == 0;
}

Subgroup subgroup_of_order(Int n, Int d) { return Subgroup(n, d); }

Int frattini_order(Int n) { return n / factorize(n).radical(); }

std::vector<Int> unitary_divisors(Int n) {
  std::vector<Int> out;
  for (Int d : divisors(n)) {
    if (gcd(d, n / d) == 1) out.push_back(d);
  }
  return out;
}

CrtFrame::CrtFrame(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] < 1) throw Error(ErrorCode::invalid_frame, "non-positive modulus");
    for (std::size_t j = 0; j < i; ++j) {
      if (gcd(moduli_[i], moduli_[j]) != 1) {
        throw Error(ErrorCode::invalid_frame, "moduli " + std::to_string(moduli_[j]) + " and " +
                                                  std::to_string(moduli_[i]) +
                                                  " are not coprime");
      }
    }
    if (n_ > kMaxModulus / moduli_[i]) throw Error(ErrorCode::invalid_frame, "product too large");
    n_ *= moduli_[i];
  }
  basis_.reserve(moduli_.size());
  for (Int m : moduli_) {
    const Int cofactor = n_ / m;
    basis_.push_back(m == 1 ? 0 : mod(cofactor * inverse_mod(cofactor % m, m), n_));
  }
}

std::vector<Int> CrtFrame::split(Int x) const {
  std::vector<Int> parts;
  parts.reserve(moduli_.size());
  for (Int m : moduli_) parts.push_back(mod(x, m));
  return parts;
}

Int CrtFrame::combine(std::span<const Int> parts) const {
  if (parts.size() != moduli_.size()) {
    throw ContractViolation("crt combine: expected " + std::to_string(moduli_.size()) + " parts");
  }
  Int x = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    x = mod(x + mod(parts[i], moduli_[i]) * basis_[i], n_);
  }
  return x;
}

CrtFrame crt_frame(std::vector<Int> moduli) { return CrtFrame(std::move(moduli)); }

}  // namespace circlab
