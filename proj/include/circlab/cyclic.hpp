#pragma once

// Exact arithmetic in the cyclic group Z_n.
//
// Moduli are bounded by 2^31 so every product of two residues fits in a
// signed 64-bit integer. Zn has exactly one subgroup per divisor d of n,
// namely the multiples of n/d, so a Subgroup is keyed by its order alone.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace circlab {

using Int = std::int64_t;

inline constexpr Int kMaxModulus = Int{1} << 31;

Int gcd(Int a, Int b);
Int mod(Int x, Int n);

class Residue {
 public:
  Residue(Int value, Int modulus);

  Int value() const noexcept { return value_; }
  Int modulus() const noexcept { return modulus_; }

  Residue operator+(const Residue& other) const;
  Residue operator-(const Residue& other) const;
  Residue operator-() const;
  Residue operator*(Int k) const;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

 private:
  void check_same_modulus(const Residue& other) const;

  Int value_;
  Int modulus_;
};

/// Least k >= 1 with k * r = 0; equals n / gcd(r, n).
Int element_order(const Residue& r);

Int euler_phi(Int n);

struct PrimePower {
  Int prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Factorization {
 public:
  explicit Factorization(Int n);

  Int value() const noexcept { return n_; }
  const std::vector<PrimePower>& terms() const noexcept { return terms_; }
  std::vector<Int> primes() const;
  /// Product of the distinct primes (1 for n = 1).
  Int radical() const;

 private:
  Int n_;
  std::vector<PrimePower> terms_;
};

Factorization factorize(Int n);
std::vector<Int> prime_set(Int n);
bool is_prime(Int n);
/// True when n = p^e for a prime p and e >= 1.
bool is_prime_power(Int n);

std::vector<Int> divisors(Int n);

/// The unique subgroup of Z_n of order d. Elements are materialized on demand.
class Subgroup {
 public:
  Subgroup(Int modulus, Int order);

  Int modulus() const noexcept { return modulus_; }
  Int order() const noexcept { return order_; }
  /// Smallest positive generator, n / d (0 for the trivial subgroup of Z_1).
  Int step() const noexcept { return modulus_ / order_; }

  bool contains(Int x) const;
  std::vector<Int> elements() const;
  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  Int modulus_;
  Int order_;
};

Subgroup subgroup_of_order(Int n, Int d);

/// Order of the Frattini subgroup of Z_n: n / rad(n).
Int frattini_order(Int n);

/// Divisors d of n with gcd(d, n/d) = 1, ascending.
std::vector<Int> unitary_divisors(Int n);

/// Chinese-remainder coordinates for Z_n with n = m_1 * ... * m_k.
class CrtFrame {
 public:
  explicit CrtFrame(std::vector<Int> moduli);

  const std::vector<Int>& moduli() const noexcept { return moduli_; }
  Int modulus() const noexcept { return n_; }

  std::vector<Int> split(Int x) const;
  Int combine(std::span<const Int> parts) const;

 private:
  std::vector<Int> moduli_;
  std::vector<Int> basis_;  // basis_[i] = 1 mod m_i, 0 mod m_j (j != i)
  Int n_ = 1;
};

CrtFrame crt_frame(std::vector<Int> moduli);

}  // namespace circlab
