// tgx: analysis, exploration scheduling, generators, validators and an exact
// oracle for temporal graphs. Plain-text formats (TG1/TW1/RT1) throughout.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgx/analysis.hpp"
#include "tgx/instance_classes.hpp"
#include "tgx/io.hpp"
#include "tgx/oracle.hpp"
#include "tgx/planner.hpp"
#include "tgx/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // validation or scheduling failure
constexpr int kExitUsage = 2;    // bad arguments or malformed input

tgx::TemporalGraph load_graph(const std::string& path, bool quiet) {
  tgx::LoadedGraph loaded = tgx::load_tg1(path);
  if (!quiet)
    for (const std::string& w : loaded.warnings)
      std::cerr << "warning: " << path << ": " << w << '\n';
  return std::move(loaded.graph);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw tgx::Error("cannot write file: " + path);
  out << content;
}

int report_validation(const tgx::ValidationReport& report) {
  std::cout << tgx::format_violations(report);
  return report.ok() ? kExitOk : kExitFailure;
}

struct GenCommon {
  std::string out;
  std::uint64_t seed = 1;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal graph exploration toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- freq ----------------------------------------------------------
  struct {
    std::string graph, out;
    bool regularity = false, two_point = false;
  } freq;
  {
    auto* cmd = app.add_subcommand("freq", "per-edge frequency table");
    cmd->add_option("graph", freq.graph, "TG1 input")->required();
    cmd->add_flag("--regularity", freq.regularity, "append per-edge regularity");
    cmd->add_flag("--two-point", freq.two_point,
                  "regularity compares E_t against E_{t+r} only");
    cmd->add_option("--out", freq.out, "output file (default stdout)");
    cmd->callback([&] {
      action = [&] {
        auto g = load_graph(freq.graph, false);
        auto table = tgx::frequency_table(g, freq.regularity, freq.two_point);
        std::string lines;
        for (tgx::Edge e : table.edges()) {
          lines += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
                   std::to_string(table.frequency(e));
          if (freq.regularity)
            lines += " " + std::to_string(*table.regularity(e));
          lines += "\n";
        }
        write_output(freq.out, lines);
        return kExitOk;
      };
    });
  }

  // ---- explore -------------------------------------------------------
  struct {
    std::string graph, out;
    tgx::Vertex start = 0;
    bool json = false, quiet = false;
  } explore;
  {
    auto* cmd = app.add_subcommand(
        "explore", "spanning-tree exploration schedule with bound report");
    cmd->add_option("graph", explore.graph, "TG1 input")->required();
    cmd->add_option("--start", explore.start, "start vertex")->required();
    cmd->add_option("--out", explore.out, "write the walk as TW1 (default stdout)");
    cmd->add_flag("--json", explore.json, "emit the report as JSON");
    cmd->add_flag("--quiet", explore.quiet, "suppress the report");
    cmd->callback([&] {
      action = [&] {
        auto g = load_graph(explore.graph, explore.quiet);
        auto result = tgx::explore(g, explore.start);
        if (!explore.quiet) {
          if (explore.json) {
            nlohmann::json j{{"n", result.report.n},
                             {"T", result.report.lifetime},
                             {"F_max", result.report.max_frequency},
                             {"mst_weight", result.report.mst_weight},
                             {"guarantee_2F", result.report.guarantee_2f},
                             {"guarantee_f2n3", result.report.guarantee_f2n3},
                             {"achieved_length", result.report.achieved_length}};
            std::cout << j.dump() << '\n';
          } else {
            std::cout << tgx::format_report(result.report);
          }
        }
        if (explore.out.empty()) {
          std::cout << tgx::to_tw1(result.walk);
        } else {
          write_output(explore.out, tgx::to_tw1(result.walk));
        }
        return kExitOk;
      };
    });
  }

  // ---- oracle --------------------------------------------------------
  struct {
    std::string graph, out;
    tgx::Vertex start = 0;
    int limit = tgx::kOracleDefaultLimit;
    int within = -1;
    bool non_strict = false;
  } oracle;
  {
    auto* cmd = app.add_subcommand("oracle", "exact fastest exploration");
    cmd->add_option("graph", oracle.graph, "TG1 input")->required();
    cmd->add_option("--start", oracle.start, "start vertex")->required();
    cmd->add_option("--limit", oracle.limit, "largest accepted vertex count");
    cmd->add_option("--within", oracle.within,
                    "decide: exploration of length < L (prints yes/no)");
    cmd->add_flag("--non-strict", oracle.non_strict, "use <= for --within");
    cmd->add_option("--out", oracle.out, "write the witness walk as TW1");
    cmd->callback([&] {
      action = [&] {
        auto g = load_graph(oracle.graph, false);
        if (oracle.within >= 0) {
          bool yes = tgx::exists_exploration_within(
              g, oracle.start, oracle.within, !oracle.non_strict, oracle.limit);
          std::cout << (yes ? "yes" : "no") << '\n';
          return kExitOk;
        }
        auto result = tgx::fastest_exploration(g, oracle.start, oracle.limit);
        if (!result.feasible()) {
          std::cout << "infeasible\n";
          if (!oracle.out.empty())
            std::cerr << "warning: no witness to write\n";
          return kExitOk;
        }
        std::cout << "optimum: " << *result.optimum << '\n';
        if (!oracle.out.empty())
          write_output(oracle.out, tgx::to_tw1(result.witness));
        return kExitOk;
      };
    });
  }

  // ---- gen -----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);

  struct {
    tgx::Vertex n = 4;
    int r = 1;
    std::string out;
  } star;
  {
    auto* cmd = gen->add_subcommand(
        "star", "star whose sparse timesteps keep only one leaf connected "
                "(intended start vertex: index 1)");
    cmd->add_option("--n", star.n, "vertex count (>= 3)")->required();
    cmd->add_option("--r", star.r, "activation period of the full star")->required();
    cmd->add_option("--out", star.out, "output file (default stdout)");
    cmd->callback([&] {
      action = [&] {
        auto instance = tgx::gen_star_lower_bound(star.n, star.r);
        write_output(star.out, tgx::to_tg1(instance.graph));
        return kExitOk;
      };
    });
  }

  struct {
    std::string routes, out;
    int lifetime = 0;
  } transport;
  {
    auto* cmd = gen->add_subcommand("transport", "expand periodic routes (RT1)");
    cmd->add_option("--routes", transport.routes, "RT1 route file")->required();
    cmd->add_option("--lifetime", transport.lifetime,
                    "timesteps (default (2n-3) * max period)");
    cmd->add_option("--out", transport.out, "output file (default stdout)");
    cmd->callback([&] {
      action = [&] {
        auto file = tgx::load_rt1(transport.routes);
        int max_period = 0;
        for (const auto& r : file.routes)
          max_period = std::max(max_period, r.period());
        int lifetime = transport.lifetime;
        if (lifetime == 0)
          lifetime = std::max(max_period,
                              max_period * (2 * static_cast<int>(file.n) - 3));
        auto g = tgx::gen_transport(file.routes, file.n, lifetime);
        write_output(transport.out, tgx::to_tg1(g));
        return kExitOk;
      };
    });
  }

  struct : GenCommon {
    tgx::Vertex n = 6;
    double density = 0.5;
    int lifetime = 0;
  } seq;
  {
    auto* cmd = gen->add_subcommand(
        "seq", "random graph where each vertex cycles through its in-edges");
    cmd->add_option("--n", seq.n, "vertex count")->required();
    cmd->add_option("--density", seq.density, "edge probability");
    cmd->add_option("--lifetime", seq.lifetime, "timesteps (default 4*n*n)");
    cmd->add_option("--seed", seq.seed, "RNG seed")->envname("TGX_SEED");
    cmd->add_option("--out", seq.out, "output file (default stdout)");
    cmd->callback([&] {
      action = [&] {
        tgx::Rng rng(seq.seed);
        auto base = tgx::random_connected_graph(seq.n, seq.density, rng);
        auto sym = tgx::to_symmetric_directed(base);
        auto schedule = tgx::random_sequential_schedule(sym, rng);
        int lifetime = seq.lifetime > 0 ? seq.lifetime : 4 * seq.n * seq.n;
        auto g = tgx::gen_sequential(sym, schedule, lifetime);
        write_output(seq.out, tgx::to_tg1(g));
        return kExitOk;
      };
    });
  }

  struct : GenCommon {
    tgx::Vertex n = 6;
    double density = 1.0;
    int lifetime = 0;
    std::string policy = "round-robin";
  } broadcast;
  {
    auto* cmd = gen->add_subcommand("broadcast",
                                    "broadcast schedule over a random graph");
    cmd->add_option("--n", broadcast.n, "vertex count")->required();
    cmd->add_option("--density", broadcast.density,
                    "edge probability (1.0 = complete graph)");
    cmd->add_option("--policy", broadcast.policy, "round-robin | greedy-random")
        ->check(CLI::IsMember({"round-robin", "greedy-random"}));
    cmd->add_option("--lifetime", broadcast.lifetime, "timesteps (default 3*n)");
    cmd->add_option("--seed", broadcast.seed, "RNG seed")->envname("TGX_SEED");
    cmd->add_option("--out", broadcast.out, "output file (default stdout)");
    cmd->callback([&] {
      action = [&] {
        tgx::Rng rng(broadcast.seed);
        auto base = tgx::random_connected_graph(broadcast.n, broadcast.density, rng);
        auto policy = broadcast.policy == "round-robin"
                          ? tgx::BroadcastPolicy::round_robin
                          : tgx::BroadcastPolicy::greedy_random;
        int lifetime = broadcast.lifetime > 0 ? broadcast.lifetime : 3 * broadcast.n;
        auto instance = tgx::gen_broadcast(base, policy, lifetime, broadcast.seed);
        write_output(broadcast.out, tgx::to_tg1(instance.graph));
        return kExitOk;
      };
    });
  }

  struct : GenCommon {
    tgx::Vertex n = 8;
    int f = 2;
    double density = 0.5;
    int lifetime = 0;
  } frequent;
  {
    auto* cmd = gen->add_subcommand(
        "random-frequent", "random graph whose edges all recur within f timesteps");
    cmd->add_option("--n", frequent.n, "vertex count")->required();
    cmd->add_option("--f", frequent.f, "frequency bound")->required();
    cmd->add_option("--density", frequent.density, "edge probability");
    cmd->add_option("--lifetime", frequent.lifetime, "timesteps (default 4*f*n)");
    cmd->add_option("--seed", frequent.seed, "RNG seed")->envname("TGX_SEED");
    cmd->add_option("--out", frequent.out, "output file (default stdout)");
    cmd->callback([&] {
      action = [&] {
        auto g = tgx::gen_random_frequent(frequent.n, frequent.f, frequent.density,
                                          frequent.seed, frequent.lifetime);
        write_output(frequent.out, tgx::to_tg1(g));
        return kExitOk;
      };
    });
  }

  // ---- validate ------------------------------------------------------
  auto* validate = app.add_subcommand("validate", "independent validators");
  validate->require_subcommand(1);

  struct {
    std::string graph, walk;
    tgx::Vertex start = 0;
  } val;
  {
    auto* cmd = validate->add_subcommand("walk", "temporal walk legality");
    cmd->add_option("graph", val.graph, "TG1 input")->required();
    cmd->add_option("walk", val.walk, "TW1 input")->required();
    cmd->callback([&] {
      action = [&] {
        auto g = load_graph(val.graph, false);
        return report_validation(tgx::validate_temporal_walk(g, tgx::load_tw1(val.walk)));
      };
    });
  }
  {
    auto* cmd = validate->add_subcommand("exploration",
                                         "walk legality plus full vertex coverage");
    cmd->add_option("graph", val.graph, "TG1 input")->required();
    cmd->add_option("walk", val.walk, "TW1 input")->required();
    cmd->add_option("--start", val.start, "required start vertex")->required();
    cmd->callback([&] {
      action = [&] {
        auto g = load_graph(val.graph, false);
        return report_validation(
            tgx::validate_exploration(g, tgx::load_tw1(val.walk), val.start));
      };
    });
  }
  {
    auto* cmd = validate->add_subcommand(
        "sequential", "one in-edge per vertex per timestep, in a fixed cycle");
    cmd->add_option("graph", val.graph, "TG1 input")->required();
    cmd->callback([&] {
      action = [&] {
        auto g = load_graph(val.graph, false);
        return report_validation(tgx::validate_sequential(g));
      };
    });
  }
  {
    auto* cmd = validate->add_subcommand(
        "broadcast", "all-or-nothing broadcasts with acknowledgements");
    cmd->add_option("graph", val.graph, "TG1 input")->required();
    cmd->callback([&] {
      action = [&] {
        auto g = load_graph(val.graph, false);
        return report_validation(tgx::validate_broadcast(g).report);
      };
    });
  }
  {
    auto* cmd = validate->add_subcommand("always-connected",
                                         "every snapshot is connected");
    cmd->add_option("graph", val.graph, "TG1 input")->required();
    cmd->callback([&] {
      action = [&] {
        auto g = load_graph(val.graph, false);
        return report_validation(tgx::validate_always_connected(g));
      };
    });
  }
  struct {
    std::string graph, routes;
  } val_transport;
  {
    auto* cmd = validate->add_subcommand("transport",
                                         "snapshots equal the route expansion");
    cmd->add_option("graph", val_transport.graph, "TG1 input")->required();
    cmd->add_option("routes", val_transport.routes, "RT1 input")->required();
    cmd->callback([&] {
      action = [&] {
        auto g = load_graph(val_transport.graph, false);
        auto file = tgx::load_rt1(val_transport.routes);
        return report_validation(tgx::validate_transport(g, file.routes));
      };
    });
  }

  // ---- bench ---------------------------------------------------------
  struct {
    std::vector<int> sizes = {50, 100, 200};
    int f = 3;
    double density = 0.3;
    std::uint64_t seed = 1;
  } bench;
  {
    auto* cmd = app.add_subcommand("bench",
                                   "time the frequency table and the planner");
    cmd->add_option("--sizes", bench.sizes, "vertex counts to try")->delimiter(',');
    cmd->add_option("--f", bench.f, "frequency bound");
    cmd->add_option("--density", bench.density, "edge probability");
    cmd->add_option("--seed", bench.seed, "RNG seed")->envname("TGX_SEED");
    cmd->callback([&] {
      action = [&] {
        using clock = std::chrono::steady_clock;
        for (int n : bench.sizes) {
          auto g = tgx::gen_random_frequent(n, bench.f, bench.density, bench.seed);
          auto t0 = clock::now();
          auto table = tgx::frequency_table(g);
          auto t1 = clock::now();
          auto result = tgx::explore(g, 0);
          auto t2 = clock::now();
          auto ms = [](auto d) {
            return std::chrono::duration<double, std::milli>(d).count();
          };
          std::cout << "n=" << n << " edges=" << g.underlying_edges().size()
                    << " T=" << g.lifetime() << " F_max=" << table.max_frequency()
                    << " freq_table_ms=" << ms(t1 - t0)
                    << " explore_ms=" << ms(t2 - t1)
                    << " achieved=" << result.report.achieved_length << '\n';
        }
        return kExitOk;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const tgx::ParseError& e) {
    std::cerr << "tgx: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tgx::Error& e) {
    std::cerr << "tgx: " << e.what() << '\n';
    return kExitFailure;
  }
}
