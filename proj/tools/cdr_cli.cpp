// Command-line front end: solving, verification, exact oracle, gadget
// construction and checking, instance generation and benchmarking.
//
// Exit codes: 0 success, 1 infeasible result or failed check, 2 usage or
// input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdr/bench.hpp"
#include "cdr/generators.hpp"
#include "cdr/io.hpp"
#include "cdr/minrep.hpp"
#include "cdr/solver.hpp"
#include "cdr/validator.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char* kOracleEnv = "CDR_ORACLE_MAX_N";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cdr::Error(cdr::Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw cdr::Error(cdr::Errc::ParseError, "cannot write '" + path + "'");
  out << text;
}

int default_oracle_max_n() {
  if (const char* env = std::getenv(kOracleEnv)) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric " << kOracleEnv << "='" << env << "'\n";
    }
  }
  return cdr::kDefaultExactMaxN;
}

// Key-value result document, optionally followed by a one-line JSON block.
class Report {
 public:
  template <typename T>
  void put(const std::string& key, const T& value) {
    std::ostringstream ss;
    ss << value;
    lines_.emplace_back(key, ss.str());
    doc_[key] = value;
  }
  void put(const std::string& key, bool value) {
    lines_.emplace_back(key, value ? "true" : "false");
    doc_[key] = value;
  }
  void put_json(const std::string& key, json value) { doc_[key] = std::move(value); }

  void print(bool with_json) const {
    for (const auto& [k, v] : lines_) std::cout << k << ": " << v << '\n';
    if (with_json) std::cout << "json: " << doc_.dump() << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  json doc_ = json::object();
};

json violations_json(const cdr::Verdict& v) {
  auto arr = json::array();
  for (const auto& x : v.violations) arr.push_back(cdr::describe(x));
  return arr;
}

void put_solution(Report& rep, const cdr::Solution& s) {
  rep.put("algorithm", std::string(cdr::to_string(s.algorithm)));
  rep.put("alpha", s.alpha);
  rep.put("size", s.size());
  rep.put("vertices", cdr::format_vertex_list(s.vertices));
  if (s.rounds) rep.put("rounds", *s.rounds);
  rep.put("feasible", s.verdict.feasible);
  rep.put_json("vertex_list", s.vertices);
  rep.put_json("violations", violations_json(s.verdict));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (cdr::Vertex v : cdr::parse_vertex_list(text)) out.push_back(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routing-cost constrained connected dominating set toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(std::string("Environment: ") + kOracleEnv +
             " sets the default vertex cap for the exact oracle (default " +
             std::to_string(cdr::kDefaultExactMaxN) + ").");
  bool with_json = false;
  app.add_flag("--json", with_json, "Append a machine-readable JSON line to the result");

  // solve
  auto* solve = app.add_subcommand("solve", "Run a solver on a graph file");
  int alpha = 2;
  std::string in_path;
  std::string algo = "best";
  std::string gain = "absolute";
  solve->add_option("--alpha", alpha, "Routing cost factor")->required()->check(CLI::Range(1, 1 << 20));
  solve->add_option("--in", in_path, "Graph file")->required();
  solve->add_option("--algo", algo, "greedy | path-augment | best | exact")
      ->check(CLI::IsMember({"greedy", "path-augment", "best", "exact"}));
  solve->add_option("--gain", gain, "Greedy gain rule: absolute | per-element")
      ->check(CLI::IsMember({"absolute", "per-element"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact minimum by exhaustive search");
  int max_n = default_oracle_max_n();
  oracle->add_option("--alpha", alpha)->required()->check(CLI::Range(1, 1 << 20));
  oracle->add_option("--in", in_path, "Graph file")->required();
  oracle->add_option("--max-n", max_n, "Refuse graphs with more vertices");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a vertex set against both problem forms");
  std::string set_text;
  verify->add_option("--alpha", alpha)->required()->check(CLI::Range(1, 1 << 20));
  verify->add_option("--in", in_path, "Graph file")->required();
  verify->add_option("--set", set_text, "Comma-separated vertex ids")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build the gadget graph of a MIN-REP instance");
  std::string out_path;
  bool check = false;
  reduce->add_option("--in", in_path, "MIN-REP JSON file")->required();
  reduce->add_option("--out", out_path, "Gadget graph path (labels go to <out>.labels.json)");
  reduce->add_flag("--check", check, "Run the structural checks on the result");

  // check-reduction
  auto* check_red = app.add_subcommand("check-reduction", "Structural checks of a gadget on disk");
  std::string labels_path;
  std::uint64_t seed = 1;
  int samples = 64;
  check_red->add_option("--graph", in_path, "Gadget graph file")->required();
  check_red->add_option("--labels", labels_path, "Label sidecar (default <graph>.labels.json)");
  check_red->add_option("--samples", samples, "Random subsets for the relay check");
  check_red->add_option("--seed", seed);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  std::string family = "gnp";
  cdr::GenParams params;
  gen->add_option("--family", family, "gnp | unit-disk | path | cycle | star | complete")
      ->check(CLI::IsMember({"gnp", "unit-disk", "path", "cycle", "star", "complete"}));
  gen->add_option("--n", params.n)->required();
  gen->add_option("--p", params.p, "Edge probability (gnp)");
  gen->add_option("--radius", params.radius, "Radius (unit-disk)");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path, "Output file (default stdout)");

  // gen-minrep
  auto* gen_mr = app.add_subcommand("gen-minrep", "Generate a random MIN-REP instance");
  int kx = 2;
  int ky = 2;
  int group_size = 2;
  double edge_prob = 0.5;
  gen_mr->add_option("--kx", kx);
  gen_mr->add_option("--ky", ky);
  gen_mr->add_option("--group-size", group_size);
  gen_mr->add_option("--p", edge_prob);
  gen_mr->add_option("--seed", seed);
  gen_mr->add_option("--out", out_path, "Output file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Compare solvers, the oracle and the ratio bounds");
  std::string alphas_text = "2,3,5";
  int instances = 10;
  bench->add_option("--family", family)->check(CLI::IsMember({"gnp", "unit-disk"}));
  bench->add_option("--n", params.n)->required();
  bench->add_option("--p", params.p);
  bench->add_option("--radius", params.radius);
  bench->add_option("--alphas", alphas_text, "Comma-separated alpha values");
  bench->add_option("--instances", instances);
  bench->add_option("--seed", seed);
  bench->add_option("--max-n", max_n, "Vertex cap for the exact oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Report rep;
    if (*solve) {
      const auto g = cdr::read_graph(slurp(in_path));
      cdr::Solution s;
      if (algo == "greedy") {
        s = cdr::solve_greedy(g, alpha,
                              gain == "per-element" ? cdr::GainRule::PerElement : cdr::GainRule::Absolute);
      } else if (algo == "path-augment") {
        s = cdr::solve_path_augment(g, alpha);
      } else if (algo == "exact") {
        s = cdr::exact_opt(g, alpha, default_oracle_max_n());
      } else {
        s = cdr::solve_best(g, alpha);
      }
      put_solution(rep, s);
      rep.print(with_json);
      return s.verdict.feasible ? kExitOk : kExitFailed;
    }
    if (*oracle) {
      const auto g = cdr::read_graph(slurp(in_path));
      const auto s = cdr::exact_opt(g, alpha, max_n);
      put_solution(rep, s);
      rep.print(with_json);
      return kExitOk;
    }
    if (*verify) {
      const auto g = cdr::read_graph(slurp(in_path));
      const auto d = cdr::parse_vertex_list(set_text);
      const auto one = cdr::validate_1dr(g, alpha, d);
      const auto full = cdr::validate_cdr(g, alpha, d);
      rep.put("alpha", alpha);
      rep.put("size", d.size());
      rep.put("vertices", cdr::format_vertex_list(d));
      rep.put("feasible", one.feasible);
      rep.put("feasible_cdr", full.feasible);
      for (const auto& v : one.violations) std::cout << "violation: " << cdr::describe(v) << '\n';
      rep.put_json("violations", violations_json(one));
      rep.put_json("violations_cdr", violations_json(full));
      rep.print(with_json);
      return one.feasible && full.feasible ? kExitOk : kExitFailed;
    }
    if (*reduce) {
      const auto inst = cdr::read_minrep(slurp(in_path));
      const auto rg = cdr::build_reduction(inst);
      if (out_path.empty()) {
        std::filesystem::path p(in_path);
        out_path = (p.parent_path() / p.stem()).string() + ".gadget.graph";
      }
      const std::string labels = out_path + ".labels.json";
      spit(out_path, cdr::write_graph(rg.graph));
      spit(labels, cdr::labels_to_json(rg).dump(2) + "\n");
      rep.put("graph", out_path);
      rep.put("labels", labels);
      rep.put("vertex_count", rg.graph.vertex_count());
      rep.put("edge_count", rg.graph.edge_count());
      rep.put("super_edges", rg.relays.size());
      bool ok = true;
      if (check) {
        const auto report = cdr::check_structure(rg);
        for (const auto& [name, value] : report.entries()) rep.put("check." + name, value);
        ok = report.all();
        rep.put("all", ok);
      }
      rep.print(with_json);
      return ok ? kExitOk : kExitFailed;
    }
    if (*check_red) {
      if (labels_path.empty()) labels_path = in_path + ".labels.json";
      const auto rg = cdr::read_reduction(slurp(in_path), slurp(labels_path));
      const auto report = cdr::check_structure(rg, {samples, seed});
      rep.put("vertex_count", rg.graph.vertex_count());
      for (const auto& [name, value] : report.entries()) rep.put("check." + name, value);
      for (const auto& f : report.failures) std::cout << "failure: " << f << '\n';
      rep.put("all", report.all());
      rep.print(with_json);
      return report.all() ? kExitOk : kExitFailed;
    }
    if (*gen) {
      const auto g = cdr::gen_graph(cdr::parse_family(family), params, seed);
      const auto text = cdr::write_graph(g);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        spit(out_path, text);
      }
      return kExitOk;
    }
    if (*gen_mr) {
      const auto inst = cdr::generate_minrep(kx, ky, group_size, edge_prob, seed);
      const auto text = cdr::write_minrep(inst);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        spit(out_path, text);
      }
      return kExitOk;
    }
    if (*bench) {
      cdr::BenchConfig cfg;
      cfg.family = cdr::parse_family(family);
      cfg.params = params;
      cfg.alphas = parse_int_list(alphas_text);
      cfg.instances = instances;
      cfg.seed = seed;
      cfg.exact_max_n = max_n;
      const auto records = cdr::run_bench(cfg);
      std::cout << cdr::bench_table(records);
      bool ok = true;
      for (const auto& r : records) {
        for (const auto& v : cdr::bench_violations(r)) {
          std::cout << "violation: instance " << r.instance_id << " alpha " << r.alpha << ": " << v << '\n';
          ok = false;
        }
      }
      if (with_json) std::cout << "json: " << cdr::bench_to_json(records).dump() << '\n';
      return ok ? kExitOk : kExitFailed;
    }
  } catch (const cdr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == cdr::Errc::Infeasible ? kExitFailed : kExitUsage;
  }
  return kExitUsage;
}
