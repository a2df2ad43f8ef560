// circlab: analyze, decompose and classify circulant digraphs Circ(n, S).
//
//   circlab analyze 9 1-8 [--json]
//   circlab decompose 15 1,2,4,7,8,11,13,14 [--json]
//   circlab verify --max-n 12 [--arc-transitive-only] [--jobs 8] [--json] [--strict]
//   circlab enumerate 8 [--arc-transitive-only] [--json]
//   circlab export 5 1,4 --dot [--out g.dot]
//
// Exit codes: 0 success, 1 --strict run with T1.1 counterexamples,
// 2 usage or parse error, 3 I/O error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "circlab/classify.hpp"
#include "circlab/error.hpp"
#include "circlab/parse.hpp"
#include "circlab/report_json.hpp"
#include "circlab/verify.hpp"

namespace {

using namespace circlab;

constexpr int kExitOk = 0;
constexpr int kExitStrict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string set_text(const std::vector<Int>& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_decomposition(std::ostream& os, const Decomposition& d) {
  os << "  b = " << d.b << "\n  complete factors = [";
  for (std::size_t i = 0; i < d.complete_factor_orders.size(); ++i) {
    os << (i ? "," : "") << d.complete_factor_orders[i];
  }
  os << "]\n  gamma0 = Circ(" << d.gamma0.order() << ", " << set_text(d.gamma0.connection_set().elements())
     << ")\n";
}

void print_report(std::ostream& os, const ClassificationReport& r) {
  os << "Circ(" << r.n << ", " << set_text(r.s) << ")\n"
     << "  connected                    " << yes_no(r.connected) << '\n'
     << "  undirected                   " << yes_no(r.undirected) << '\n'
     << "  arc_transitive               " << yes_no(r.arc_transitive) << '\n'
     << "  all_full_order               " << yes_no(r.all_full_order) << '\n'
     << "  multiplier_transitive        " << yes_no(r.multiplier_transitive) << '\n'
     << "  normal_arc_transitive        " << yes_no(r.normal_arc_transitive) << '\n'
     << "  contains_full_coset          " << yes_no(r.contains_full_coset) << '\n'
     << "  contains_punctured_coset_ge4 " << yes_no(r.contains_punctured_coset_ge4) << '\n'
     << "  c_normal_oracle              " << yes_no(r.c_normal_oracle) << '\n'
     << "  normal_circulant_oracle      "
     << (r.normal_circulant_oracle ? yes_no(*r.normal_circulant_oracle) : "partial") << '\n'
     << "  aut_order                    " << to_string(r.aut_order) << '\n'
     << "  normalizer_order             " << r.normalizer_order << '\n';
  if (r.decomposition) {
    os << "decomposition:\n";
    print_decomposition(os, *r.decomposition);
  }
}

void print_agreement(std::ostream& os, const AgreementReport& r) {
  os << "verify: n <= " << r.n_max << (r.arc_transitive_only ? " (arc-transitive only)" : "")
     << ", prime powers <= " << r.prime_power_max << '\n';
  for (const auto& c : r.instances) {
    os << "  n=" << c.n << " classified=" << c.classified << " arc_transitive=" << c.arc_transitive
       << " partial_oracle=" << c.partial_oracle << '\n';
  }
  for (const auto& t : r.tallies) {
    os << t.name << ": checked " << t.checked << ", agree " << t.agreements << " ("
       << std::fixed << std::setprecision(2) << t.agreement_percent() << "%), counterexamples "
       << t.counterexamples.size() << '\n';
    for (const auto& c : t.counterexamples) {
      os << "    (" << c.n << ", " << set_text(c.s) << ") " << c.evidence.dump() << '\n';
    }
  }
}

struct Instance {
  std::string n_text;
  std::string s_text;
  CirculantGraph graph() const {
    const Int n = parse_order(n_text);
    return CirculantGraph(parse_connection_set(n, s_text));
  }
};

void add_instance_args(CLI::App* cmd, Instance& inst) {
  cmd->add_option("n", inst.n_text, "order of the cyclic group")->required();
  cmd->add_option("S", inst.s_text, "connection set, e.g. 1,3-5 (empty string for none)")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification laboratory for circulant digraphs Circ(n, S)"};
  app.require_subcommand(1);

  Instance analyze_inst, decompose_inst, export_inst;
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "classify one circulant");
  add_instance_args(analyze, analyze_inst);
  analyze->add_flag("--json", json, "emit JSON");

  auto* decompose_cmd = app.add_subcommand("decompose", "canonical decomposition of a connected arc-transitive circulant");
  add_instance_args(decompose_cmd, decompose_inst);
  decompose_cmd->add_flag("--json", json, "emit JSON");

  VerifyOptions verify_opts;
  bool strict = false;
  auto* verify = app.add_subcommand("verify", "exhaustive sweep scored against the oracle");
  verify->add_option("--max-n", verify_opts.n_max, "largest order swept")->required();
  verify->add_flag("--arc-transitive-only", verify_opts.arc_transitive_only, "classify arc-transitive instances only");
  verify->add_option("--jobs", verify_opts.jobs, "worker threads (default: all cores)");
  verify->add_option("--prime-power-max", verify_opts.prime_power_max,
                     "extend the prime-power audit up to this order");
  verify->add_flag("--json", json, "emit JSON");
  verify->add_flag("--strict", strict, "exit 1 if T1.1 has counterexamples");

  std::string enum_n;
  bool enum_at = false;
  auto* enumerate = app.add_subcommand("enumerate", "connected S up to multiplier equivalence");
  enumerate->add_option("n", enum_n, "order")->required();
  enumerate->add_flag("--arc-transitive-only", enum_at, "keep arc-transitive instances only");
  enumerate->add_flag("--json", json, "emit JSON");

  bool dot = false, edges = false;
  std::string out_path;
  auto* export_cmd = app.add_subcommand("export", "write DOT or an edge list");
  add_instance_args(export_cmd, export_inst);
  auto* dot_flag = export_cmd->add_flag("--dot", dot, "Graphviz output");
  auto* edges_flag = export_cmd->add_flag("--edges", edges, "one 'v w' line per arc");
  dot_flag->excludes(edges_flag);
  export_cmd->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const auto report = classify(analyze_inst.graph());
      if (json) {
        std::cout << to_json(report).dump(2) << '\n';
      } else {
        print_report(std::cout, report);
      }
    } else if (decompose_cmd->parsed()) {
      const auto d = decompose(decompose_inst.graph());
      if (json) {
        std::cout << to_json(d).dump(2) << '\n';
      } else {
        std::cout << "decomposition:\n";
        print_decomposition(std::cout, d);
      }
    } else if (verify->parsed()) {
      const auto report = verify_range(verify_opts);
      if (json) {
        std::cout << to_json(report).dump(2) << '\n';
      } else {
        print_agreement(std::cout, report);
      }
      if (strict && !report.tally("T1.1").counterexamples.empty()) return kExitStrict;
    } else if (enumerate->parsed()) {
      const Int n = parse_order(enum_n);
      EnumerateOptions opts;
      opts.arc_candidates_only = enum_at;
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& s : enumerate_connection_sets(n, opts)) {
        const CirculantGraph g(s);
        if (enum_at && !is_arc_transitive(g)) continue;
        if (json) {
          list.push_back(s.elements());
        } else {
          std::cout << set_text(s.elements()) << '\n';
        }
      }
      if (json) std::cout << nlohmann::ordered_json{{"n", n}, {"sets", list}}.dump() << '\n';
    } else if (export_cmd->parsed()) {
      if (!dot && !edges) {
        std::cerr << "export: choose --dot or --edges\n";
        return kExitUsage;
      }
      const auto g = export_inst.graph();
      const std::string text = dot ? to_dot(g) : to_edge_list(g);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file || !(file << text) || !file.flush()) {
          std::cerr << "export: cannot write " << out_path << '\n';
          return kExitIo;
        }
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
