#pragma once

#include <optional>
#include <vector>

#include "circlab/automorphism.hpp"
#include "circlab/circulant.hpp"
#include "circlab/group.hpp"

namespace circlab {

/// (Gamma0 x K_n1 x ... x K_nr)[K_b-bar], all factors over pairwise coprime
/// orders, complete factors of order >= 4.
struct Decomposition {
  Int b = 1;
  std::vector<Int> complete_factor_orders;
  CirculantGraph gamma0 = trivial_circulant();

  Int order() const;
  /// lex_blowup(tensor(gamma0, K_n1, ..., K_nr), b).
  CirculantGraph reconstruct() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

bool all_full_order(const CirculantGraph& g);

/// Aut(C,S) transitive on S. Requires a connected graph with at least one arc.
bool is_normal_arc_transitive(const CirculantGraph& g);

/// Some coset t + H of a nontrivial subgroup lies inside S. Checking the
/// prime-order subgroups suffices.
bool contains_full_coset(const CirculantGraph& g);

/// Some t + (H \ {0}) with |H| >= min_order lies inside S.
bool contains_punctured_coset(const CirculantGraph& g, Int min_order);

enum class CosetVariant { literal, extended };

/// literal: no full coset in S. extended: additionally no punctured coset of
/// a subgroup of order >= 4. Requires connected and arc-transitive input.
bool normal_circulant_predicate(const CirculantGraph& g, CosetVariant variant);
bool normal_circulant_predicate(const CirculantGraph& g, CosetVariant variant, const GroupHandle& aut);

/// Kernel quotient followed by greedy peeling of complete tensor factors.
/// Only needs a connected graph; reconstruction is checked before returning.
Decomposition decompose_structure(const CirculantGraph& g);

/// decompose_structure with the connected and arc-transitive preconditions.
Decomposition decompose(const CirculantGraph& g);
Decomposition decompose(const CirculantGraph& g, const GroupHandle& aut);

struct ClassificationReport {
  Int n = 1;
  std::vector<Int> s;
  bool connected = false;
  bool undirected = false;
  bool arc_transitive = false;
  bool all_full_order = false;
  bool multiplier_transitive = false;
  bool normal_arc_transitive = false;
  bool contains_full_coset = false;
  bool contains_punctured_coset_ge4 = false;
  bool c_normal_oracle = false;
  /// nullopt when |Aut| exceeded the element-enumeration limit.
  std::optional<bool> normal_circulant_oracle;
  std::optional<Decomposition> decomposition;
  GroupOrder aut_order = 1;
  Int normalizer_order = 1;

  /// Exact oracle value when available, else the standard-subgroup test.
  bool normal() const { return normal_circulant_oracle.value_or(c_normal_oracle); }

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ClassifyOptions {
  GroupOrder enumeration_limit = kElementEnumerationLimit;
  SearchOptions search;
};

ClassificationReport classify(const CirculantGraph& g, const ClassifyOptions& options = {});
ClassificationReport classify(const CirculantGraph& g, const GroupHandle& aut,
                              const ClassifyOptions& options = {});

}  // namespace circlab
