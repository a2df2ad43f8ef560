#include "circlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "circlab/error.hpp"
#include "circlab/multiplier.hpp"
#include "circlab/report_json.hpp"

namespace circlab {

namespace {

using Mask = std::uint64_t;
using Json = nlohmann::ordered_json;

Mask full_mask(Int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

Mask rotate(Mask m, Int h, Int n) {
  h %= n;
  if (h == 0) return m;
  return ((m << h) | (m >> (n - h))) & full_mask(n);
}

Mask negate(Mask m, Int n) {
  Mask out = 0;
  for (Mask rest = m; rest; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    out |= Mask{1} << ((n - x) % n);
  }
  return out;
}

Mask scale(Mask m, Int k, Int n) {
  Mask out = 0;
  for (Mask rest = m; rest; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    out |= Mask{1} << (x * k % n);
  }
  return out;
}

// Lexicographic order of the sorted element lists of two equal-size sets:
// the set holding the lowest differing element is smaller.
bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

bool is_connected_mask(Mask m, const std::vector<Mask>& prime_multiples) {
  return std::none_of(prime_multiples.begin(), prime_multiples.end(),
                      [&](Mask pm) { return (m & ~pm) == 0; });
}

bool arc_filter_mask(Mask m, Int n) {
  if (m == 0) return false;
  int first_a = -1, first_b = -1;
  bool first_c = false;
  Mask neg = 0;
  bool have_neg = false;
  for (Mask rest = m; rest; rest &= rest - 1) {
    const Int x = std::countr_zero(rest);
    const bool c = (m >> ((n - x) % n)) & 1;
    const int a = std::popcount(m & rotate(m, x, n));
    if (first_a >= 0 && (c != first_c || a != first_a)) return false;
    if (!have_neg) {
      neg = negate(m, n);
      have_neg = true;
    }
    const int b = std::popcount(m & rotate(neg, x, n));
    if (first_a < 0) {
      first_a = a;
      first_b = b;
      first_c = c;
    } else if (b != first_b) {
      return false;
    }
  }
  return true;
}

struct InstanceResult {
  ClassificationReport report;
  std::optional<GroupOrder> quotient_aut_order;
  bool gamma0_is_c4 = false;
  std::optional<bool> gamma0_normal;
  bool punctured_ge2 = false;
  bool punctured_ge3 = false;
};

InstanceResult process(const ConnectionSet& s, const ClassifyOptions& options) {
  const CirculantGraph g(s);
  InstanceResult r;
  r.report = classify(g, options);
  r.punctured_ge2 = contains_punctured_coset(g, 2);
  r.punctured_ge3 = contains_punctured_coset(g, 3);
  if (r.report.decomposition) {
    const auto& d = *r.report.decomposition;
    const auto& g0 = d.gamma0;
    r.gamma0_is_c4 = g0.order() == 4 && are_isomorphic(g0, cycle(4));
    if (d.b > 1) {
      const auto sigma = quotient_by(g, translation_kernel(g));
      r.quotient_aut_order = automorphism_group(sigma, options.search).order();
    }
    const auto aut0 = automorphism_group(g0, options.search);
    if (aut0.order() <= options.enumeration_limit) {
      r.gamma0_normal = exists_normal_regular_cyclic(g0, aut0, options.enumeration_limit);
    } else {
      r.gamma0_normal = is_translation_subgroup_normal(g0, aut0);
    }
  }
  return r;
}

std::vector<InstanceResult> run_parallel(const std::vector<ConnectionSet>& work,
                                         const ClassifyOptions& options, unsigned jobs) {
  std::vector<InstanceResult> results(work.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, work.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed) {
      const std::size_t i = next++;
      if (i >= work.size()) return;
      try {
        results[i] = process(work[i], options);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

Int product_p_minus_one(Int n) {
  Int prod = 1;
  for (Int p : prime_set(n)) prod *= p - 1;
  return prod;
}

Json base_evidence(const ClassificationReport& r) {
  Json e;
  e["valency"] = r.s.size();
  e["aut_order"] = group_order_to_json(r.aut_order);
  e["normalizer_order"] = r.normalizer_order;
  e["c_normal_oracle"] = r.c_normal_oracle;
  if (r.normal_circulant_oracle) {
    e["normal_circulant_oracle"] = *r.normal_circulant_oracle;
  } else {
    e["normal_circulant_oracle"] = "partial";
  }
  return e;
}

std::vector<Tally> make_tallies() {
  const std::pair<const char*, const char*> claims[] = {
      {"T1.1", "connected arc-transitive: all elements of S have order n <=> Aut(C,S) transitive on S"},
      {"T1.4-literal", "connected arc-transitive: normal circulant <=> S contains no coset of a nontrivial subgroup"},
      {"T1.4-extended",
       "connected arc-transitive: normal circulant <=> no full coset and no punctured coset of order >= 4"},
      {"T1.4-extended-min2", "as T1.4-extended with punctured-coset threshold 2"},
      {"T1.4-extended-min3", "as T1.4-extended with punctured-coset threshold 3"},
      {"C1.5", "arc-transitive Circ(p^e, S), p^e > 3: normal <=> |S| divides p - 1"},
      {"C1.5-noncomplete", "arc-transitive Circ(p^e, S), p^e > 3, |S| < p^e - 1: normal <=> |S| divides p - 1"},
      {"C1.5-coprime", "arc-transitive with gcd(|S|, n) = 1 => normal circulant"},
      {"C1.6", "normal circulant => |S| divides prod (p_i - 1)"},
      {"C1.6-arc-transitive", "arc-transitive normal circulant => |S| divides prod (p_i - 1)"},
      {"wreath-order", "decomposed with b > 1, Gamma0 not C4: |Aut| = (b!)^(n/b) |Aut Sigma|"},
      {"normal-at-structure",
       "normal-arc-transitive => complete factors prime and pi(b) within pi(n0) and the factor primes"},
      {"key-0", "connected arc-transitive with a full coset in S => not a normal circulant"},
      {"normalizer-order", "translations normal => |Aut| = n |Aut(C,S)|"},
      {"nat-implies-at", "connected with Aut(C,S) transitive on S => arc-transitive"},
      {"decomposition-roundtrip", "lex_blowup(tensor(Gamma0, K_ni), b) reproduces S"},
      {"gamma0-normal", "Gamma0 of an arc-transitive decomposition is a normal circulant"},
      {"normal-oracle-divergence", "some normal regular cyclic subgroup <=> the translations are normal"},
  };
  std::vector<Tally> out;
  for (const auto& [name, claim] : claims) out.push_back(Tally{name, claim, 0, 0, {}});
  return out;
}

void tally_c15(AgreementReport& report, const ClassificationReport& r) {
  if (!r.arc_transitive || !is_prime_power(r.n) || r.n <= 3) return;
  const Int p = prime_set(r.n).front();
  const bool divides = (p - 1) % static_cast<Int>(r.s.size()) == 0;
  Json e = base_evidence(r);
  e["p"] = p;
  e["valency_divides_p_minus_1"] = divides;
  const bool agrees = r.normal() == divides;
  if (static_cast<Int>(r.s.size()) < r.n - 1) report.tally("C1.5-noncomplete").record(agrees, r.n, r.s, e);
  report.tally("C1.5").record(agrees, r.n, r.s, std::move(e));
}

void tally_instance(AgreementReport& report, const InstanceResult& ir) {
  const auto& r = ir.report;
  const Int n = r.n;
  const auto& s = r.s;
  const bool normal = r.normal();
  const Int valency = static_cast<Int>(s.size());

  if (r.connected && r.normal_circulant_oracle) {
    Json e = base_evidence(r);
    report.tally("normal-oracle-divergence").record(*r.normal_circulant_oracle == r.c_normal_oracle, n, s, e);
  }
  if (r.c_normal_oracle) {
    Json e = base_evidence(r);
    report.tally("normalizer-order").record(r.aut_order == static_cast<GroupOrder>(r.normalizer_order), n, s, e);
  }
  if (r.connected && r.multiplier_transitive) {
    Json e = base_evidence(r);
    e["arc_transitive"] = r.arc_transitive;
    report.tally("nat-implies-at").record(r.arc_transitive, n, s, e);
  }
  if (normal) {
    const Int prod = product_p_minus_one(n);
    Json e = base_evidence(r);
    e["prod_p_minus_1"] = prod;
    const bool ok = prod % valency == 0;
    report.tally("C1.6").record(ok, n, s, e);
    if (r.arc_transitive) report.tally("C1.6-arc-transitive").record(ok, n, s, e);
  }
  if (!r.arc_transitive) return;

  {
    Json e = base_evidence(r);
    e["all_full_order"] = r.all_full_order;
    e["multiplier_transitive"] = r.multiplier_transitive;
    report.tally("T1.1").record(r.all_full_order == r.multiplier_transitive, n, s, e);
  }
  {
    Json e = base_evidence(r);
    e["contains_full_coset"] = r.contains_full_coset;
    e["contains_punctured_coset_ge4"] = r.contains_punctured_coset_ge4;
    report.tally("T1.4-literal").record(normal == !r.contains_full_coset, n, s, e);
    report.tally("T1.4-extended")
        .record(normal == !(r.contains_full_coset || r.contains_punctured_coset_ge4), n, s, e);
    e["contains_punctured_coset_ge2"] = ir.punctured_ge2;
    e["contains_punctured_coset_ge3"] = ir.punctured_ge3;
    report.tally("T1.4-extended-min2").record(normal == !(r.contains_full_coset || ir.punctured_ge2), n, s, e);
    report.tally("T1.4-extended-min3").record(normal == !(r.contains_full_coset || ir.punctured_ge3), n, s, e);
    if (r.contains_full_coset) report.tally("key-0").record(!normal, n, s, e);
  }
  tally_c15(report, r);
  if (gcd(valency, n) == 1) report.tally("C1.5-coprime").record(normal, n, s, base_evidence(r));

  if (!r.decomposition) return;
  const auto& d = *r.decomposition;
  Json de;
  de["b"] = d.b;
  de["complete_factor_orders"] = d.complete_factor_orders;
  de["gamma0_n"] = d.gamma0.order();
  de["gamma0_S"] = d.gamma0.connection_set().elements();

  report.tally("decomposition-roundtrip")
      .record(d.reconstruct().connection_set().elements() == s, n, s, de);
  if (ir.gamma0_normal) report.tally("gamma0-normal").record(*ir.gamma0_normal, n, s, de);

  if (d.b > 1 && !ir.gamma0_is_c4 && ir.quotient_aut_order) {
    GroupOrder expected = *ir.quotient_aut_order;
    const GroupOrder fb = factorial(static_cast<unsigned>(d.b));
    for (Int i = 0; i < n / d.b; ++i) expected *= fb;
    Json e = de;
    e["aut_order"] = group_order_to_json(r.aut_order);
    e["quotient_aut_order"] = group_order_to_json(*ir.quotient_aut_order);
    e["wreath_order"] = group_order_to_json(expected);
    report.tally("wreath-order").record(expected == r.aut_order, n, s, e);
  }
  if (r.normal_arc_transitive) {
    bool factors_prime = std::all_of(d.complete_factor_orders.begin(), d.complete_factor_orders.end(),
                                     [](Int x) { return is_prime(x); });
    auto allowed = prime_set(d.gamma0.order());
    for (Int x : d.complete_factor_orders) {
      for (Int p : prime_set(x)) allowed.push_back(p);
    }
    bool b_ok = true;
    for (Int p : prime_set(d.b)) {
      b_ok = b_ok && std::find(allowed.begin(), allowed.end(), p) != allowed.end();
    }
    Json e = de;
    e["factors_prime"] = factors_prime;
    e["pi_b_contained"] = b_ok;
    report.tally("normal-at-structure").record(factors_prime && b_ok, n, s, e);
  }
}

}  // namespace

double Tally::agreement_percent() const {
  return checked == 0 ? 100.0 : 100.0 * static_cast<double>(agreements) / static_cast<double>(checked);
}

void Tally::record(bool agrees, Int n, const std::vector<Int>& s, nlohmann::ordered_json evidence) {
  ++checked;
  if (agrees) {
    ++agreements;
  } else {
    counterexamples.push_back(Counterexample{n, s, std::move(evidence)});
  }
}

const Tally& AgreementReport::tally(const std::string& name) const {
  for (const auto& t : tallies) {
    if (t.name == name) return t;
  }
  throw ContractViolation("unknown tally " + name);
}

Tally& AgreementReport::tally(const std::string& name) {
  return const_cast<Tally&>(std::as_const(*this).tally(name));
}

bool passes_arc_invariant_filter(const ConnectionSet& s) {
  if (!s.has_mask()) throw ContractViolation("arc filter needs n <= 64");
  return arc_filter_mask(s.mask(), s.modulus());
}

std::vector<ConnectionSet> enumerate_connection_sets(Int n, const EnumerateOptions& options) {
  if (n < 2 || n > 32) throw Error(ErrorCode::guard_exceeded, "enumeration needs 2 <= n <= 32");
  std::vector<Mask> prime_multiples;
  for (Int p : prime_set(n)) {
    Mask pm = 0;
    for (Int x = 0; x < n; x += p) pm |= Mask{1} << x;
    prime_multiples.push_back(pm);
  }
  auto unit_list = units(n);
  unit_list.erase(std::remove(unit_list.begin(), unit_list.end(), Int{1}), unit_list.end());

  std::vector<ConnectionSet> out;
  const Mask limit = Mask{1} << (n - 1);
  for (Mask bits = 1; bits < limit; ++bits) {
    const Mask m = bits << 1;
    if (options.connected_only && !is_connected_mask(m, prime_multiples)) continue;
    if (options.arc_candidates_only && !arc_filter_mask(m, n)) continue;
    const bool canonical = std::none_of(unit_list.begin(), unit_list.end(),
                                        [&](Int k) { return lex_less(scale(m, k, n), m); });
    if (canonical) out.push_back(ConnectionSet::from_mask(n, m));
  }
  std::sort(out.begin(), out.end(),
            [](const ConnectionSet& a, const ConnectionSet& b) { return a.elements() < b.elements(); });
  return out;
}

AgreementReport verify_range(const VerifyOptions& options) {
  if (options.n_max < kVerifyMinN || options.n_max > kVerifyMaxN) {
    throw Error(ErrorCode::guard_exceeded, "n_max must lie in [" + std::to_string(kVerifyMinN) + ", " +
                                               std::to_string(kVerifyMaxN) + "], got " +
                                               std::to_string(options.n_max));
  }
  if (options.prime_power_max > kPrimePowerAuditMax) {
    throw Error(ErrorCode::guard_exceeded,
                "prime_power_max must not exceed " + std::to_string(kPrimePowerAuditMax));
  }

  AgreementReport report;
  report.n_max = options.n_max;
  report.arc_transitive_only = options.arc_transitive_only;
  report.prime_power_max = std::max(options.prime_power_max, options.n_max);
  report.tallies = make_tallies();

  EnumerateOptions enumerate;
  enumerate.arc_candidates_only = options.arc_transitive_only;
  for (Int n = 2; n <= options.n_max; ++n) {
    const auto work = enumerate_connection_sets(n, enumerate);
    const auto results = run_parallel(work, options.classify, options.jobs);
    InstanceCount count{n, 0, 0, 0};
    for (const auto& ir : results) {
      ++count.classified;
      if (options.arc_transitive_only && !ir.report.arc_transitive) continue;
      if (ir.report.arc_transitive) ++count.arc_transitive;
      if (!ir.report.normal_circulant_oracle) ++count.partial_oracle;
      tally_instance(report, ir);
    }
    report.instances.push_back(count);
  }

  EnumerateOptions candidates;
  candidates.arc_candidates_only = true;
  for (Int n = options.n_max + 1; n <= options.prime_power_max; ++n) {
    if (!is_prime_power(n)) continue;
    const auto work = enumerate_connection_sets(n, candidates);
    const auto results = run_parallel(work, options.classify, options.jobs);
    InstanceCount count{n, 0, 0, 0};
    for (const auto& ir : results) {
      ++count.classified;
      if (!ir.report.arc_transitive) continue;
      ++count.arc_transitive;
      if (!ir.report.normal_circulant_oracle) ++count.partial_oracle;
      tally_c15(report, ir.report);
    }
    report.instances.push_back(count);
  }
  return report;
}

}  // namespace circlab
