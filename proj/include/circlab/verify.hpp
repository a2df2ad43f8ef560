#pragma once

// Exhaustive verification harness.
//
// Every connected Circ(n, S) up to multiplier equivalence is classified with
// the brute-force oracle and each checkable claim is tallied. Counterexamples
// are kept verbatim with the oracle evidence that produced them.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "circlab/classify.hpp"

namespace circlab {

inline constexpr Int kVerifyMinN = 3;
inline constexpr Int kVerifyMaxN = 16;
inline constexpr Int kPrimePowerAuditMax = 27;

struct Counterexample {
  Int n = 0;
  std::vector<Int> s;
  nlohmann::ordered_json evidence;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct Tally {
  std::string name;
  std::string claim;
  Int checked = 0;
  Int agreements = 0;
  std::vector<Counterexample> counterexamples;

  double agreement_percent() const;
  void record(bool agrees, Int n, const std::vector<Int>& s, nlohmann::ordered_json evidence);

  friend bool operator==(const Tally&, const Tally&) = default;
};

struct InstanceCount {
  Int n = 0;
  /// Instances run through the oracle (connected classes, or arc-transitive
  /// candidates when only arc-transitive instances are requested).
  Int classified = 0;
  Int arc_transitive = 0;
  Int partial_oracle = 0;

  friend bool operator==(const InstanceCount&, const InstanceCount&) = default;
};

struct AgreementReport {
  Int n_max = 0;
  bool arc_transitive_only = false;
  Int prime_power_max = 0;
  std::vector<InstanceCount> instances;
  std::vector<Tally> tallies;

  const Tally& tally(const std::string& name) const;
  Tally& tally(const std::string& name);

  friend bool operator==(const AgreementReport&, const AgreementReport&) = default;
};

struct VerifyOptions {
  Int n_max = 8;
  bool arc_transitive_only = false;
  /// 0 selects the hardware concurrency.
  unsigned jobs = 0;
  /// Prime-power orders in (n_max, prime_power_max] are added to the C1.5
  /// audit only. Values <= n_max disable the extension.
  Int prime_power_max = 0;
  ClassifyOptions classify;
};

/// Throws guard_exceeded unless 3 <= n_max <= 16 and prime_power_max <= 27.
AgreementReport verify_range(const VerifyOptions& options);

/// Necessary condition for arc-transitivity: for every s in S the counts
/// |S & (S + s)|, |S & (s - S)| and [-s in S] coincide, since an automorphism
/// fixing 0 and sending s to s' carries each count of the arc (0, s) to the
/// arc (0, s').
bool passes_arc_invariant_filter(const ConnectionSet& s);

struct EnumerateOptions {
  bool connected_only = true;
  /// Keep only sets passing passes_arc_invariant_filter.
  bool arc_candidates_only = false;
};

/// One representative (multiplier_canonical) per multiplier class of
/// nonempty S in Z_n \ {0}, ascending. Requires 2 <= n <= 32.
std::vector<ConnectionSet> enumerate_connection_sets(Int n, const EnumerateOptions& options = {});

}  // namespace circlab
