#include "circlab/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "circlab/error.hpp"

namespace circlab {

namespace {

struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
  std::vector<char> adj;  // row-major n*n

  explicit Digraph(const CirculantGraph& g) : n(static_cast<int>(g.order())) {
    if (g.order() > 4096) throw ContractViolation("automorphism search: order too large");
    out.resize(static_cast<std::size_t>(n));
    in.resize(static_cast<std::size_t>(n));
    adj.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      for (Int s : g.connection_set().elements()) {
        const int w = static_cast<int>((v + s) % n);
        out[static_cast<std::size_t>(v)].push_back(w);
        in[static_cast<std::size_t>(w)].push_back(v);
        adj[static_cast<std::size_t>(v * n + w)] = 1;
      }
    }
  }

  bool arc(int v, int w) const { return adj[static_cast<std::size_t>(v * n + w)] != 0; }
};

using Colouring = std::vector<int>;
using Signature = std::vector<int>;

std::vector<Signature> signatures(const Digraph& g, const Colouring& col) {
  std::vector<Signature> sig(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    auto& s = sig[static_cast<std::size_t>(v)];
    const auto& out = g.out[static_cast<std::size_t>(v)];
    const auto& in = g.in[static_cast<std::size_t>(v)];
    s.reserve(out.size() + in.size() + 2);
    s.push_back(col[static_cast<std::size_t>(v)]);
    const auto mark = s.size();
    for (int w : out) s.push_back(col[static_cast<std::size_t>(w)]);
    std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
    s.push_back(-1);
    const auto mark2 = s.size();
    for (int w : in) s.push_back(col[static_cast<std::size_t>(w)]);
    std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark2), s.end());
  }
  return sig;
}

// Refines both colourings in lockstep with a shared, order-preserving
// relabelling. Returns false as soon as the colour histograms differ, which
// proves no colour-preserving isomorphism exists.
bool refine_pair(const Digraph& a, Colouring& ca, const Digraph& b, Colouring& cb, int& ncolours) {
  while (true) {
    auto sa = signatures(a, ca);
    auto sb = signatures(b, cb);
    auto sorted_a = sa;
    std::sort(sorted_a.begin(), sorted_a.end());
    if (&a != &b || ca != cb) {
      auto sorted_b = sb;
      std::sort(sorted_b.begin(), sorted_b.end());
      if (sorted_a != sorted_b) return false;
    }
    sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
    auto index_of = [&](const Signature& s) {
      return static_cast<int>(std::lower_bound(sorted_a.begin(), sorted_a.end(), s) - sorted_a.begin());
    };
    for (std::size_t v = 0; v < sa.size(); ++v) ca[v] = index_of(sa[v]);
    for (std::size_t v = 0; v < sb.size(); ++v) cb[v] = index_of(sb[v]);
    const int count = static_cast<int>(sorted_a.size());
    if (count == ncolours) return true;
    ncolours = count;
  }
}

// Smallest colour class with more than one vertex, or -1 if discrete.
int target_cell(const Colouring& col, int ncolours) {
  std::vector<int> size(static_cast<std::size_t>(ncolours), 0);
  for (int c : col) ++size[static_cast<std::size_t>(c)];
  for (int c = 0; c < ncolours; ++c) {
    if (size[static_cast<std::size_t>(c)] > 1) return c;
  }
  return -1;
}

// Members of colour class c, ordered by exploration rank.
std::vector<int> cell_members(const Colouring& col, int c, const std::vector<int>& by_rank) {
  std::vector<int> out;
  for (int v : by_rank) {
    if (col[static_cast<std::size_t>(v)] == c) out.push_back(v);
  }
  return out;
}

class Searcher {
 public:
  Searcher(const Digraph& a, const Digraph& b, std::vector<int> by_rank)
      : a_(a), b_(b), by_rank_(std::move(by_rank)) {}

  // Depth-first search for a colour-preserving isomorphism a -> b.
  std::optional<Permutation> find(Colouring ca, Colouring cb, int ncolours) const {
    if (!refine_pair(a_, ca, b_, cb, ncolours)) return std::nullopt;
    const int cell = target_cell(ca, ncolours);
    if (cell < 0) return leaf(ca, cb);
    const int x = cell_members(ca, cell, by_rank_).front();
    for (int y : cell_members(cb, cell, by_rank_)) {
      Colouring na = ca, nb = cb;
      na[static_cast<std::size_t>(x)] = ncolours;
      nb[static_cast<std::size_t>(y)] = ncolours;
      if (auto found = find(std::move(na), std::move(nb), ncolours + 1)) return found;
    }
    return std::nullopt;
  }

 private:
  std::optional<Permutation> leaf(const Colouring& ca, const Colouring& cb) const {
    const int n = a_.n;
    std::vector<int> vertex_of_colour(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) vertex_of_colour[static_cast<std::size_t>(cb[static_cast<std::size_t>(w)])] = w;
    std::vector<Point> img(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      img[static_cast<std::size_t>(v)] = vertex_of_colour[static_cast<std::size_t>(ca[static_cast<std::size_t>(v)])];
    }
    for (int v = 0; v < n; ++v) {
      for (int w : a_.out[static_cast<std::size_t>(v)]) {
        if (!b_.arc(img[static_cast<std::size_t>(v)], img[static_cast<std::size_t>(w)])) return std::nullopt;
      }
    }
    return Permutation(std::move(img));
  }

  const Digraph& a_;
  const Digraph& b_;
  std::vector<int> by_rank_;
};

std::vector<int> exploration_order(int n, const SearchOptions& options) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (options.seed) {
    std::mt19937_64 rng(*options.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

bool fixes_all(const Permutation& p, const std::vector<int>& points) {
  return std::all_of(points.begin(), points.end(), [&](int x) { return p(x) == x; });
}

}  // namespace

std::vector<Permutation> automorphism_generators(const CirculantGraph& g, SearchOptions options) {
  const Digraph graph(g);
  const int n = graph.n;
  const auto by_rank = exploration_order(n, options);
  const Searcher searcher(graph, graph, by_rank);

  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(Permutation::rotation(static_cast<std::size_t>(n), 1));

  Colouring col(static_cast<std::size_t>(n), 0);
  int ncolours = 1;
  std::vector<int> base;
  while (true) {
    Colouring scratch = col;
    refine_pair(graph, col, graph, scratch, ncolours);
    const int cell = target_cell(col, ncolours);
    if (cell < 0) break;
    const auto members = cell_members(col, cell, by_rank);
    const int b = members.front();

    std::vector<Permutation> fixing;
    for (const auto& p : gens) {
      if (fixes_all(p, base)) fixing.push_back(p);
    }
    auto reached = orbit(b, fixing, static_cast<std::size_t>(n));
    for (int v : members) {
      if (std::binary_search(reached.begin(), reached.end(), v)) continue;
      Colouring ca = col, cb = col;
      ca[static_cast<std::size_t>(b)] = ncolours;
      cb[static_cast<std::size_t>(v)] = ncolours;
      if (auto found = searcher.find(std::move(ca), std::move(cb), ncolours + 1)) {
        gens.push_back(*found);
        fixing.push_back(std::move(*found));
        reached = orbit(b, fixing, static_cast<std::size_t>(n));
      }
    }
    col[static_cast<std::size_t>(b)] = ncolours++;
    base.push_back(b);
  }
  return gens;
}

GroupHandle automorphism_group(const CirculantGraph& g, SearchOptions options) {
  const auto gens = automorphism_generators(g, options);
  return GroupHandle(static_cast<std::size_t>(g.order()), gens);
}

bool is_arc_transitive(const CirculantGraph& g, const GroupHandle& aut) {
  if (g.valency() == 0) {
    throw Error(ErrorCode::undefined_arc_transitivity, "Circ(" + std::to_string(g.order()) + ", {}) has no arcs");
  }
  const Int n = g.order();
  const auto& gens = aut.generators();
  // Arc (v, w) encoded as v * n + w.
  std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
  std::vector<Int> queue{g.connection_set().elements().front()};
  seen[static_cast<std::size_t>(queue.front())] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = static_cast<Point>(queue[head] / n);
    const auto w = static_cast<Point>(queue[head] % n);
    for (const auto& p : gens) {
      const Int code = Int{p(v)} * n + p(w);
      if (!seen[static_cast<std::size_t>(code)]) {
        seen[static_cast<std::size_t>(code)] = 1;
        queue.push_back(code);
      }
    }
  }
  return queue.size() == static_cast<std::size_t>(n) * g.valency();
}

bool is_arc_transitive(const CirculantGraph& g) { return is_arc_transitive(g, automorphism_group(g)); }

bool is_translation_subgroup_normal(const CirculantGraph& g, const GroupHandle& aut) {
  const Int n = g.order();
  const auto rho = Permutation::rotation(static_cast<std::size_t>(n), 1);
  for (const auto& a : aut.generators()) {
    const auto c = conjugate(a, rho);
    const Int shift = c(0);
    if (c != Permutation::rotation(static_cast<std::size_t>(n), shift)) return false;
  }
  return true;
}

bool is_translation_subgroup_normal(const CirculantGraph& g) {
  return is_translation_subgroup_normal(g, automorphism_group(g));
}

bool exists_normal_regular_cyclic(const CirculantGraph& g, const GroupHandle& aut, GroupOrder limit) {
  const auto n = static_cast<std::size_t>(g.order());
  if (n == 1) return true;
  const auto& gens = aut.generators();
  bool found = false;
  std::vector<Point> cyc(n);
  std::vector<std::size_t> pos(n);
  std::vector<std::size_t> preimage_of_zero;
  for (const auto& a : gens) preimage_of_zero.push_back(static_cast<std::size_t>(a.inverse()(0)));
  aut.for_each_element(limit, [&](std::span<const Point> c) {
    // Regular cyclic subgroups of degree n are generated exactly by n-cycles.
    Point x = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && x == 0) return true;
      cyc[i] = x;
      pos[static_cast<std::size_t>(x)] = i;
      x = c[static_cast<std::size_t>(x)];
    }
    // d = a c a^-1 satisfies d(a(y)) = a(c(y)); it lies in <c> iff it equals
    // c^k for k fixed by the image of 0.
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& a = gens[i];
      const Point d0 = a(c[preimage_of_zero[i]]);
      const std::size_t k = pos[static_cast<std::size_t>(d0)];
      for (std::size_t y = 0; y < n; ++y) {
        const Point d_ay = a(c[y]);
        const auto ay = static_cast<std::size_t>(a(static_cast<Point>(y)));
        if (d_ay != cyc[(pos[ay] + k) % n]) return true;
      }
    }
    found = true;
    return false;
  });
  return found;
}

bool exists_normal_regular_cyclic(const CirculantGraph& g, GroupOrder limit) {
  return exists_normal_regular_cyclic(g, automorphism_group(g), limit);
}

bool is_isomorphism(const CirculantGraph& from, const CirculantGraph& to, const Permutation& p) {
  if (from.order() != to.order() || from.valency() != to.valency()) return false;
  if (p.degree() != static_cast<std::size_t>(from.order())) return false;
  const Int n = from.order();
  for (Int v = 0; v < n; ++v) {
    for (Int s : from.connection_set().elements()) {
      const Int w = (v + s) % n;
      if (!to.has_arc(p(static_cast<Point>(v)), p(static_cast<Point>(w)))) return false;
    }
  }
  return true;
}

std::optional<Permutation> find_isomorphism(const CirculantGraph& g1, const CirculantGraph& g2,
                                            SearchOptions options) {
  if (g1.order() != g2.order() || g1.valency() != g2.valency()) return std::nullopt;
  const Digraph a(g1), b(g2);
  const Searcher searcher(a, b, exploration_order(a.n, options));
  return searcher.find(Colouring(static_cast<std::size_t>(a.n), 0),
                       Colouring(static_cast<std::size_t>(b.n), 0), 1);
}

bool are_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2, SearchOptions options) {
  return find_isomorphism(g1, g2, options).has_value();
}

}  // namespace circlab
