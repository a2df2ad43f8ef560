#include "circlab/circulant.hpp"

#include <algorithm>
#include <sstream>

#include "circlab/error.hpp"

namespace circlab {

namespace {

std::uint64_t full_mask(Int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Mask of S + h (h in [0, n)), n <= 64.
std::uint64_t rotate_mask(std::uint64_t m, Int h, Int n) {
  if (h == 0) return m;
  return ((m << h) | (m >> (n - h))) & full_mask(n);
}

bool is_translation_invariant(const ConnectionSet& s, Int h) {
  const Int n = s.modulus();
  h = mod(h, n);
  if (s.has_mask()) return rotate_mask(s.mask(), h, n) == s.mask();
  return std::all_of(s.elements().begin(), s.elements().end(),
                     [&](Int x) { return s.contains(mod(x + h, n)); });
}

std::string set_label(const CirculantGraph& g) {
  std::ostringstream os;
  os << "Circ(" << g.order() << ",{";
  const auto& el = g.connection_set().elements();
  for (std::size_t i = 0; i < el.size(); ++i) os << (i ? "," : "") << el[i];
  os << "})";
  return os.str();
}

}  // namespace

ConnectionSet::ConnectionSet(Int modulus, std::vector<Int> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus < 1 || modulus > kMaxModulus) {
    throw Error(ErrorCode::invalid_connection_set, "modulus " + std::to_string(modulus));
  }
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Int x = elements_[i];
    if (x <= 0 || x >= modulus) {
      throw Error(ErrorCode::invalid_connection_set,
                  "element " + std::to_string(x) + " not in [1, " + std::to_string(modulus - 1) +
                      "]");
    }
    if (i > 0 && elements_[i - 1] == x) {
      throw Error(ErrorCode::invalid_connection_set, "repeated element " + std::to_string(x));
    }
    if (has_mask()) mask_ |= std::uint64_t{1} << x;
  }
}

ConnectionSet ConnectionSet::from_mask(Int modulus, std::uint64_t mask) {
  if (modulus < 1 || modulus > 64 || (mask & ~full_mask(modulus)) != 0 || (mask & 1) != 0) {
    throw Error(ErrorCode::invalid_connection_set, "bad mask for modulus " + std::to_string(modulus));
  }
  ConnectionSet s;
  s.modulus_ = modulus;
  s.mask_ = mask;
  for (Int x = 1; x < modulus; ++x) {
    if ((mask >> x) & 1) s.elements_.push_back(x);
  }
  return s;
}

bool ConnectionSet::contains(Int x) const {
  if (x < 0 || x >= modulus_) return false;
  if (has_mask()) return (mask_ >> x) & 1;
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

CirculantGraph make(Int n, std::vector<Int> s) { return CirculantGraph(ConnectionSet(n, std::move(s))); }

CirculantGraph complete(Int n) {
  std::vector<Int> s;
  for (Int x = 1; x < n; ++x) s.push_back(x);
  return make(n, std::move(s));
}

CirculantGraph cycle(Int n) {
  std::vector<Int> s;
  if (n >= 2) s.push_back(1);
  if (n >= 3) s.push_back(n - 1);
  return make(n, std::move(s));
}

CirculantGraph unit_circulant(Int n) {
  std::vector<Int> s;
  for (Int x = 1; x < n; ++x) {
    if (gcd(x, n) == 1) s.push_back(x);
  }
  return make(n, std::move(s));
}

CirculantGraph trivial_circulant() { return make(1, {}); }

bool is_connected(const CirculantGraph& g) {
  Int d = g.order();
  for (Int s : g.connection_set().elements()) d = gcd(d, s);
  return d == 1;
}

bool is_undirected(const CirculantGraph& g) {
  const auto& s = g.connection_set();
  return std::all_of(s.elements().begin(), s.elements().end(),
                     [&](Int x) { return s.contains(g.order() - x); });
}

CirculantGraph tensor_product(const CirculantGraph& g1, const CirculantGraph& g2) {
  const Int n1 = g1.order(), n2 = g2.order();
  if (gcd(n1, n2) != 1) {
    throw Error(ErrorCode::not_a_circulant,
                "orders " + std::to_string(n1) + " and " + std::to_string(n2) + " are not coprime");
  }
  if (n2 == 1) return g1;
  if (n1 == 1) return g2;
  const CrtFrame frame({n1, n2});
  std::vector<Int> t;
  t.reserve(g1.valency() * g2.valency());
  for (Int a : g1.connection_set().elements()) {
    for (Int b : g2.connection_set().elements()) {
      const Int parts[2] = {a, b};
      t.push_back(frame.combine(parts));
    }
  }
  return make(n1 * n2, std::move(t));
}

CirculantGraph tensor_product(std::span<const CirculantGraph> factors) {
  CirculantGraph acc = trivial_circulant();
  for (const auto& f : factors) acc = tensor_product(acc, f);
  return acc;
}

CirculantGraph lex_blowup(const CirculantGraph& g, Int b) {
  if (b < 1) throw ContractViolation("lex_blowup: multiplicity must be positive");
  const Int m = g.order();
  std::vector<Int> s;
  s.reserve(g.valency() * static_cast<std::size_t>(b));
  for (Int k = 0; k < b; ++k) {
    for (Int x : g.connection_set().elements()) s.push_back(x + k * m);
  }
  return make(m * b, std::move(s));
}

Subgroup translation_kernel(const CirculantGraph& g) {
  const Int n = g.order();
  // The kernel is the set of multiples of its least positive element, which
  // divides n; so the first invariant divisor found ascending is the step.
  for (Int step : divisors(n)) {
    if (is_translation_invariant(g.connection_set(), step)) return Subgroup(n, n / step);
  }
  return Subgroup(n, 1);
}

CirculantGraph quotient_by(const CirculantGraph& g, const Subgroup& k) {
  const Int n = g.order();
  if (k.modulus() != n) throw ContractViolation("quotient_by: subgroup of a different group");
  if (!is_translation_invariant(g.connection_set(), k.step() % n)) {
    throw Error(ErrorCode::invalid_quotient, "S is not a union of cosets of the order-" +
                                                 std::to_string(k.order()) + " subgroup");
  }
  const Int m = k.step();
  std::vector<Int> s;
  for (Int x : g.connection_set().elements()) {
    const Int r = x % m;
    if (r == 0) {
      throw Error(ErrorCode::invalid_quotient, "S meets the subgroup itself");
    }
    if (s.empty() || s.back() != r) s.push_back(r);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return make(m, std::move(s));
}

std::vector<std::pair<Int, Int>> arcs(const CirculantGraph& g) {
  std::vector<std::pair<Int, Int>> out;
  const Int n = g.order();
  out.reserve(static_cast<std::size_t>(n) * g.valency());
  for (Int v = 0; v < n; ++v) {
    std::vector<Int> heads;
    for (Int s : g.connection_set().elements()) heads.push_back((v + s) % n);
    std::sort(heads.begin(), heads.end());
    for (Int w : heads) out.emplace_back(v, w);
  }
  return out;
}

std::string to_edge_list(const CirculantGraph& g) {
  std::ostringstream os;
  for (const auto& [v, w] : arcs(g)) os << v << ' ' << w << '\n';
  return os.str();
}

std::string to_dot(const CirculantGraph& g) {
  const bool undirected = is_undirected(g);
  std::ostringstream os;
  os << (undirected ? "graph" : "digraph") << " \"" << set_label(g) << "\" {\n";
  for (Int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const auto& [v, w] : arcs(g)) {
    if (undirected) {
      if (v < w) os << "  " << v << " -- " << w << ";\n";
    } else {
      os << "  " << v << " -> " << w << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace circlab
