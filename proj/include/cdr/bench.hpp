#pragma once

// Benchmark harness: solver sizes against the exact optimum (when the
// instance is small enough) and the analytic ratio bounds.

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cdr/generators.hpp"
#include "cdr/solver.hpp"

namespace cdr {

struct BenchConfig {
  Family family = Family::Gnp;
  GenParams params;
  std::vector<int> alphas{2, 3, 5};
  int instances = 10;
  std::uint64_t seed = 1;
  int exact_max_n = kDefaultExactMaxN;
};

struct BenchRecord {
  int instance_id = 0;
  int n = 0;
  /// Targets of the constructed cover instance (vertices + couples).
  int t = 0;
  int alpha = 0;
  std::map<std::string, int> sizes;
  std::optional<int> opt;
  int greedy_rounds = 0;
  double wall_ms = 0.0;
  /// Ratio bound with the element count n, and with the alternative 2t bound
  /// on any solution size; both are reported, neither is preferred.
  std::optional<double> ratio_bound_n;
  std::optional<double> ratio_bound_2t;
};

inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRecord> out;
  for (int i = 0; i < cfg.instances; ++i) {
    const Graph g = gen_graph(cfg.family, cfg.params, cfg.seed + static_cast<std::uint64_t>(i));
    for (int alpha : cfg.alphas) {
      const auto start = std::chrono::steady_clock::now();
      BenchRecord rec;
      rec.instance_id = i;
      rec.n = g.vertex_count();
      rec.alpha = alpha;
      const auto greedy = greedy_run(g, alpha);
      rec.t = greedy.trace.target_count;
      rec.greedy_rounds = static_cast<int>(greedy.trace.rounds.size());
      rec.sizes[std::string(to_string(Algorithm::GreedySct))] = static_cast<int>(greedy.solution.size());
      if (alpha >= 5) {
        rec.sizes[std::string(to_string(Algorithm::PathAugment))] =
            static_cast<int>(solve_path_augment(g, alpha).size());
      }
      rec.sizes[std::string(to_string(Algorithm::BestOf))] = static_cast<int>(solve_best(g, alpha).size());
      if (g.vertex_count() <= cfg.exact_max_n) {
        rec.opt = static_cast<int>(exact_opt(g, alpha, cfg.exact_max_n).size());
      }
      if (rec.n >= 2 && rec.t >= 2 && alpha >= 2) {
        rec.ratio_bound_n = theoretical_ratio(rec.n, rec.t, alpha);
        rec.ratio_bound_2t = theoretical_ratio(std::min(rec.n, 2 * rec.t), rec.t, alpha);
      }
      rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                        .count();
      out.push_back(std::move(rec));
    }
  }
  return out;
}

/// Problems with a record: a size below OPT or above n.
inline std::vector<std::string> bench_violations(const BenchRecord& r) {
  std::vector<std::string> out;
  for (const auto& [name, size] : r.sizes) {
    if (r.opt && size < *r.opt) out.push_back(name + " below OPT");
    if (size > r.n) out.push_back(name + " above n");
  }
  return out;
}

inline nlohmann::json bench_to_json(const std::vector<BenchRecord>& records) {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"instance", r.instance_id}, {"n", r.n},        {"t", r.t},
                     {"alpha", r.alpha},          {"sizes", r.sizes}, {"greedy_rounds", r.greedy_rounds},
                     {"wall_ms", r.wall_ms}};
    j["opt"] = r.opt ? nlohmann::json(*r.opt) : nlohmann::json(nullptr);
    j["ratio_bound_n"] = r.ratio_bound_n ? nlohmann::json(*r.ratio_bound_n) : nlohmann::json(nullptr);
    j["ratio_bound_2t"] = r.ratio_bound_2t ? nlohmann::json(*r.ratio_bound_2t) : nlohmann::json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline std::string bench_table(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance\tn\tt\talpha\tgreedy\tpath\tbest\topt\trounds\tbound_n\tbound_2t\tms\n";
  for (const auto& r : records) {
    auto size_of = [&](Algorithm a) {
      const auto it = r.sizes.find(std::string(to_string(a)));
      return it == r.sizes.end() ? std::string("-") : std::to_string(it->second);
    };
    auto num = [](const std::optional<double>& v) {
      if (!v) return std::string("-");
      std::ostringstream s;
      s.precision(4);
      s << *v;
      return s.str();
    };
    out << r.instance_id << '\t' << r.n << '\t' << r.t << '\t' << r.alpha << '\t'
        << size_of(Algorithm::GreedySct) << '\t' << size_of(Algorithm::PathAugment) << '\t'
        << size_of(Algorithm::BestOf) << '\t' << (r.opt ? std::to_string(*r.opt) : "-") << '\t'
        << r.greedy_rounds << '\t' << num(r.ratio_bound_n) << '\t' << num(r.ratio_bound_2t) << '\t'
        << num(r.wall_ms) << '\n';
  }
  return out.str();
}

}  // namespace cdr
