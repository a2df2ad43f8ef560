#pragma once

// Brute-force automorphism oracle for circulant digraphs.
//
// The search individualizes base points one at a time, refines the coloured
// partition with 1-dimensional colour refinement (old colour plus multisets of
// out- and in-neighbour colours), and backtracks over images inside the
// matching cell. At each base level only candidates outside the orbit of the
// already-found automorphisms are searched, so the collected generators form
// a strong generating set relative to the chosen base.

#include <cstdint>
#include <optional>
#include <vector>

#include "circlab/circulant.hpp"
#include "circlab/group.hpp"
#include "circlab/perm.hpp"

namespace circlab {

struct SearchOptions {
  /// When set, base points and candidate images are explored in a random
  /// order derived from the seed; otherwise ascending.
  std::optional<std::uint64_t> seed;
};

inline constexpr GroupOrder kElementEnumerationLimit = 1'000'000;

/// Generators of Aut(Circ(n,S)); the first one is always x -> x+1 (for n > 1).
std::vector<Permutation> automorphism_generators(const CirculantGraph& g, SearchOptions options = {});

GroupHandle automorphism_group(const CirculantGraph& g, SearchOptions options = {});

/// Orbit of the arc (0, min S) under the group has size n * |S|.
bool is_arc_transitive(const CirculantGraph& g, const GroupHandle& aut);
bool is_arc_transitive(const CirculantGraph& g);

/// Every generator conjugates x -> x+1 into a power of itself.
bool is_translation_subgroup_normal(const CirculantGraph& g, const GroupHandle& aut);
bool is_translation_subgroup_normal(const CirculantGraph& g);

/// Some n-cycle in Aut generates a subgroup normalized by every generator.
/// Throws oracle_too_large when |Aut| exceeds the limit.
bool exists_normal_regular_cyclic(const CirculantGraph& g, const GroupHandle& aut,
                                  GroupOrder limit = kElementEnumerationLimit);
bool exists_normal_regular_cyclic(const CirculantGraph& g, GroupOrder limit = kElementEnumerationLimit);

/// An adjacency-preserving bijection from g1 onto g2, if one exists.
std::optional<Permutation> find_isomorphism(const CirculantGraph& g1, const CirculantGraph& g2,
                                            SearchOptions options = {});
bool are_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2, SearchOptions options = {});

/// Adjacency preserved in both directions (arc counts are equal for circulants
/// of equal order and valency).
bool is_isomorphism(const CirculantGraph& from, const CirculantGraph& to, const Permutation& p);

}  // namespace circlab
