#include "circlab/classify.hpp"

#include <algorithm>

#include "circlab/error.hpp"
#include "circlab/multiplier.hpp"

namespace circlab {

namespace {

void require_connected(const CirculantGraph& g, const char* op) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::precondition, std::string(op) + ": graph is disconnected");
  }
}

void require_arc_transitive(const CirculantGraph& g, const GroupHandle& aut, const char* op) {
  if (g.valency() == 0 || !is_arc_transitive(g, aut)) {
    throw Error(ErrorCode::precondition, std::string(op) + ": graph is not arc-transitive");
  }
}

// S = (Z_d \ {0}) x S' under the frame (d, m/d)? Returns S' on success.
std::optional<CirculantGraph> split_complete_factor(const CirculantGraph& g, Int d) {
  const Int m = g.order();
  const Int rest = m / d;
  const auto& s = g.connection_set();
  std::vector<Int> second;
  for (Int x : s.elements()) {
    if (x % d == 0) return std::nullopt;
    second.push_back(x % rest);
  }
  std::sort(second.begin(), second.end());
  second.erase(std::unique(second.begin(), second.end()), second.end());
  if (rest == 1) {
    if (s.size() != static_cast<std::size_t>(d - 1)) return std::nullopt;
    return trivial_circulant();
  }
  if (!second.empty() && second.front() == 0) return std::nullopt;
  if (s.size() != static_cast<std::size_t>(d - 1) * second.size()) return std::nullopt;
  // Distinct x in S map to distinct (x mod d, x mod rest) pairs, all with a
  // nonzero first coordinate; the count check makes the product exhaustive.
  return make(rest, std::move(second));
}

}  // namespace

Int Decomposition::order() const {
  Int n = gamma0.order() * b;
  for (Int d : complete_factor_orders) n *= d;
  return n;
}

CirculantGraph Decomposition::reconstruct() const {
  CirculantGraph product = gamma0;
  for (Int d : complete_factor_orders) product = tensor_product(product, complete(d));
  return lex_blowup(product, b);
}

bool all_full_order(const CirculantGraph& g) {
  const auto& el = g.connection_set().elements();
  return std::all_of(el.begin(), el.end(), [&](Int s) { return gcd(s, g.order()) == 1; });
}

bool is_normal_arc_transitive(const CirculantGraph& g) {
  require_connected(g, "is_normal_arc_transitive");
  if (g.valency() == 0) throw Error(ErrorCode::precondition, "is_normal_arc_transitive: no arcs");
  return is_transitive_on_s(aut_c_s(g), g.connection_set());
}

bool contains_full_coset(const CirculantGraph& g) {
  const Int n = g.order();
  const auto& s = g.connection_set();
  for (Int p : prime_set(n)) {
    const Int step = n / p;
    for (Int t = 0; t < step; ++t) {
      bool inside = true;
      for (Int k = 0; k < p && inside; ++k) inside = s.contains(t + k * step);
      if (inside) return true;
    }
  }
  return false;
}

bool contains_punctured_coset(const CirculantGraph& g, Int min_order) {
  if (min_order < 2) throw ContractViolation("contains_punctured_coset: min_order must be >= 2");
  const Int n = g.order();
  const auto& s = g.connection_set();
  for (Int d : divisors(n)) {
    if (d < min_order) continue;
    const Int step = n / d;
    for (Int t = 0; t < n; ++t) {
      bool inside = true;
      for (Int k = 1; k < d && inside; ++k) inside = s.contains((t + k * step) % n);
      if (inside) return true;
    }
  }
  return false;
}

bool normal_circulant_predicate(const CirculantGraph& g, CosetVariant variant, const GroupHandle& aut) {
  require_connected(g, "normal_circulant_predicate");
  require_arc_transitive(g, aut, "normal_circulant_predicate");
  if (contains_full_coset(g)) return false;
  return variant == CosetVariant::literal || !contains_punctured_coset(g, 4);
}

bool normal_circulant_predicate(const CirculantGraph& g, CosetVariant variant) {
  return normal_circulant_predicate(g, variant, automorphism_group(g));
}

Decomposition decompose_structure(const CirculantGraph& g) {
  require_connected(g, "decompose");
  Decomposition out;
  const auto kernel = translation_kernel(g);
  out.b = kernel.order();
  CirculantGraph rest = quotient_by(g, kernel);

  bool peeled = true;
  while (peeled) {
    peeled = false;
    const auto candidates = unitary_divisors(rest.order());
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
      const Int d = *it;
      if (d < 4) break;
      if (auto remainder = split_complete_factor(rest, d)) {
        out.complete_factor_orders.push_back(d);
        rest = std::move(*remainder);
        peeled = true;
        break;
      }
    }
  }
  out.gamma0 = std::move(rest);

  if (out.reconstruct() != g) {
    throw Error(ErrorCode::internal_consistency, "decomposition does not reconstruct the input");
  }
  return out;
}

Decomposition decompose(const CirculantGraph& g, const GroupHandle& aut) {
  require_connected(g, "decompose");
  require_arc_transitive(g, aut, "decompose");
  return decompose_structure(g);
}

Decomposition decompose(const CirculantGraph& g) {
  require_connected(g, "decompose");
  return decompose(g, automorphism_group(g));
}

ClassificationReport classify(const CirculantGraph& g, const GroupHandle& aut,
                              const ClassifyOptions& options) {
  ClassificationReport r;
  r.n = g.order();
  r.s = g.connection_set().elements();
  r.connected = is_connected(g);
  r.undirected = is_undirected(g);
  r.arc_transitive = g.valency() > 0 && is_arc_transitive(g, aut);
  r.all_full_order = all_full_order(g);
  const auto ms = aut_c_s(g);
  r.multiplier_transitive = g.valency() > 0 && is_transitive_on_s(ms, g.connection_set());
  r.normal_arc_transitive = r.arc_transitive && r.multiplier_transitive;
  r.contains_full_coset = contains_full_coset(g);
  r.contains_punctured_coset_ge4 = contains_punctured_coset(g, 4);
  r.c_normal_oracle = is_translation_subgroup_normal(g, aut);
  if (aut.order() <= options.enumeration_limit) {
    r.normal_circulant_oracle = exists_normal_regular_cyclic(g, aut, options.enumeration_limit);
  }
  if (r.connected && r.arc_transitive) r.decomposition = decompose_structure(g);
  r.aut_order = aut.order();
  r.normalizer_order = g.order() * static_cast<Int>(ms.size());
  return r;
}

ClassificationReport classify(const CirculantGraph& g, const ClassifyOptions& options) {
  return classify(g, automorphism_group(g, options.search), options);
}

}  // namespace circlab
