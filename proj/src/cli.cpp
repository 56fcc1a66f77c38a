#include "udh/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "udh/colour_order.hpp"
#include "udh/density_audit.hpp"
#include "udh/inequality.hpp"
#include "udh/json_io.hpp"
#include "udh/reduced_select.hpp"
#include "udh/ternary.hpp"

namespace udh {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph load_hypergraph(const std::string& path) {
  try {
    return parse_hypergraph(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;
};

// Everything a subcommand produces: a JSON report or plain text, and a code.
struct Outcome {
  int code = kAffirmative;
  std::optional<Json> report;
  std::string text;
};

Json envelope(const std::string& command, const Json& config, const Globals& g) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  Json cfg = config;
  cfg["seed"] = g.seed;
  cfg["threads"] = g.threads;
  j["config"] = cfg;
  return j;
}

AuditMode parse_mode(const std::string& s) {
  if (s == "exact") return AuditMode::exact;
  if (s == "heuristic") return AuditMode::heuristic;
  throw Error("mode must be 'exact' or 'heuristic'");
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return kAffirmative;
    case Verdict::violated: return kNegative;
    case Verdict::unresolved: return kUnresolved;
  }
  return kUnresolved;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniformly dense hypergraph toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Master seed for every randomized step")->capture_default_str();
  app.add_option("--threads", g.threads, "Maximum worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_option("-o,--output", g.output, "Write the report to this file instead of standard output");

  std::function<Outcome()> action;

  // decide-pi1 ---------------------------------------------------------------
  std::string file;
  auto* pi1 = app.add_subcommand("decide-pi1", "Search for a vertex ordering and forced shadow colouring");
  pi1->add_option("file", file, "Hypergraph in HYG format")->required();
  pi1->callback([&] {
    action = [&] {
      const auto f = load_hypergraph(file);
      Outcome o;
      Json j = envelope("decide-pi1", {{"file", file}}, g);
      if (auto w = decide_condition_b(f)) {
        j["result"] = witness_to_json(*w, f.uniformity());
      } else {
        j["result"] = "none";
        o.code = kNegative;
      }
      o.report = j;
      return o;
    };
  });

  // frequent -----------------------------------------------------------------
  auto* freq = app.add_subcommand("frequent", "Decide embeddability into a k-ary hypergraph");
  freq->add_option("file", file, "Hypergraph in HYG format")->required();
  freq->callback([&] {
    action = [&] {
      const auto f = load_hypergraph(file);
      Outcome o;
      Json j = envelope("frequent", {{"file", file}}, g);
      if (auto w = decide_ternary_embeddable(f)) {
        j["result"] = embedding_to_json(*w);
      } else {
        j["result"] = "none";
        o.code = kNegative;
      }
      o.report = j;
      return o;
    };
  });

  // generate -----------------------------------------------------------------
  std::string kind;
  int gen_k = 3;
  std::size_t gen_n = 1;
  std::string colouring_file;
  auto* gen = app.add_subcommand("generate", "Write a k-ary hypergraph or an H_phi instance in HYG format");
  gen->add_option("kind", kind, "ternary | hphi")->required()->check(CLI::IsMember({"ternary", "hphi"}));
  gen->add_option("--k", gen_k, "Uniformity")->capture_default_str();
  gen->add_option("--n", gen_n, "Depth (ternary) or vertex count (hphi)")->capture_default_str();
  gen->add_option("--colouring", colouring_file, "Explicit colouring file for hphi; random from --seed otherwise");
  gen->callback([&] {
    action = [&] {
      Outcome o;
      if (kind == "ternary") {
        o.text = serialize_hypergraph(build_ternary(gen_k, gen_n));
      } else {
        const PairColouring phi = colouring_file.empty() ? random_pair_colouring(gen_n, gen_k, g.seed)
                                                         : parse_pair_colouring(read_file(colouring_file));
        o.text = "# seed " + std::to_string(g.seed) + "\n" + serialize_hypergraph(build_h_phi(phi));
      }
      return o;
    };
  });

  // audit --------------------------------------------------------------------
  std::string notion, mode = "exact";
  double d = 0.0, eta = 0.0;
  std::vector<double> eta_grid;
  AuditBudget budget;
  auto* audit = app.add_subcommand("audit", "Check a uniform-density notion on a hypergraph");
  audit->add_option("notion", notion, "vertex | triple | profile")->required()->check(CLI::IsMember({"vertex", "triple", "profile"}));
  audit->add_option("file", file, "Hypergraph in HYG format")->required();
  audit->add_option("--d", d, "Density threshold")->capture_default_str();
  audit->add_option("--eta", eta, "Slack parameter (vertex, triple)")->capture_default_str();
  audit->add_option("--grid", eta_grid, "Eta values for the profile")->delimiter(',');
  audit->add_option("--mode", mode, "exact | heuristic")->capture_default_str();
  audit->add_option("--restarts", budget.restarts, "Heuristic restarts")->capture_default_str();
  audit->add_option("--iterations", budget.iterations, "Local-search steps per restart")->capture_default_str();
  audit->callback([&] {
    action = [&] {
      const auto h = load_hypergraph(file);
      Outcome o;
      Json cfg = {{"notion", notion}, {"file", file}, {"mode", mode}, {"restarts", budget.restarts},
                  {"iterations", budget.iterations}};
      if (notion == "profile") {
        if (eta_grid.empty()) eta_grid = {0.25, 0.5, 0.75, 1.0};
        cfg["grid"] = eta_grid;
        Json j = envelope("audit", cfg, g);
        j["result"] = profile_to_json(density_profile(h, eta_grid, parse_mode(mode), budget, g.seed));
        o.report = j;
        return o;
      }
      cfg["d"] = d;
      cfg["eta"] = eta;
      DensityQuery q;
      q.d = d;
      q.eta = eta;
      q.mode = parse_mode(mode);
      q.budget = budget;
      q.seed = g.seed;
      q.threads = g.threads;
      const auto r = notion == "vertex" ? vertex_density_check(h, q) : triple_density_check(h, q);
      Json j = envelope("audit", cfg, g);
      j["result"] = report_to_json(r);
      o.report = j;
      o.code = verdict_code(r.verdict);
      return o;
    };
  });

  // sweep --------------------------------------------------------------------
  std::size_t sweep_f = 4;
  auto* sweep = app.add_subcommand("sweep", "Cross-check the ordering decider against frequency on all small patterns");
  sweep->add_option("--f", sweep_f, "Number of vertices (at most 5)")->capture_default_str()->check(CLI::Range(0, 5));
  sweep->callback([&] {
    action = [&] {
      Outcome o;
      Json rows = Json::array();
      std::size_t both = 0, ordering_only = 0, frequent_only = 0, neither = 0;
      std::uint64_t mask = 0;
      enumerate_hypergraphs(3, sweep_f, [&](const Hypergraph& f) {
        const bool b = decide_condition_b(f).has_value();
        const bool fr = is_frequent(f);
        (b && fr ? both : b ? ordering_only : fr ? frequent_only : neither)++;
        rows.push_back({{"mask", mask++}, {"edges", f.edges()}, {"condition_b", b}, {"frequent", fr}});
      });
      Json j = envelope("sweep", {{"f", sweep_f}}, g);
      j["result"] = {{"rows", rows},
                     {"counts",
                      {{"frequent_and_b", both}, {"b_only", ordering_only}, {"frequent_without_b", frequent_only},
                       {"neither", neither}}},
                     {"consistency_violations", frequent_only}};
      o.report = j;
      o.code = frequent_only == 0 ? kAffirmative : kNegative;
      return o;
    };
  });

  // reduced ------------------------------------------------------------------
  double mu = 0.5;
  std::size_t core_f = 3, node_budget = 1'000'000;
  std::string core_file;
  std::size_t red_m = 8, size_lo = 2, size_hi = 2;
  double red_p = 0.5;
  auto* reduced = app.add_subcommand("reduced", "Reduced hypergraphs and rainbow-core selection");
  reduced->require_subcommand(1);
  auto* rsel = reduced->add_subcommand("select", "Run the staged red/blue/green selection");
  rsel->add_option("file", file, "Reduced hypergraph JSON")->required();
  rsel->add_option("--mu", mu, "Density parameter")->capture_default_str();
  rsel->add_option("--f", core_f, "Number of indices to select")->capture_default_str();
  rsel->add_option("--budget", node_budget, "Search nodes per tuple choice")->capture_default_str();
  rsel->callback([&] {
    action = [&] {
      const auto a = reduced_from_json(load_json(file));
      Outcome o;
      CoreRunInfo info;
      auto core = select_rainbow_core(a, mu, core_f, node_budget, &info);
      Json j = envelope("reduced select", {{"file", file}, {"mu", mu}, {"f", core_f}, {"budget", node_budget}}, g);
      j["result"] = core ? core_to_json(*core) : Json("none");
      j["stats"] = {{"red_indices", info.red_indices},
                    {"blue_indices", info.blue_indices},
                    {"nodes", info.stats.nodes},
                    {"budget_hit", info.stats.budget_hit}};
      o.report = j;
      o.code = core ? kAffirmative : kUnresolved;
      return o;
    };
  });
  auto* rver = reduced->add_subcommand("verify", "Check a core selection against a reduced hypergraph");
  rver->add_option("file", file, "Reduced hypergraph JSON")->required();
  rver->add_option("core", core_file, "Core selection JSON")->required();
  rver->callback([&] {
    action = [&] {
      const auto a = reduced_from_json(load_json(file));
      Json doc = load_json(core_file);
      // Accept either a bare selection or a select report.
      if (doc.contains("result")) doc = doc["result"];
      const bool ok = verify_core(a, core_from_json(doc));
      Json j = envelope("reduced verify", {{"file", file}, {"core", core_file}}, g);
      j["result"] = ok;
      return Outcome{ok ? kAffirmative : kNegative, j, {}};
    };
  });
  auto* rrand = reduced->add_subcommand("random", "Sample a mu-dense reduced hypergraph");
  rrand->add_option("--m", red_m, "Number of indices")->capture_default_str();
  rrand->add_option("--size-lo", size_lo, "Smallest class size")->capture_default_str();
  rrand->add_option("--size-hi", size_hi, "Largest class size")->capture_default_str();
  rrand->add_option("--p", red_p, "Triple inclusion probability")->capture_default_str();
  rrand->add_option("--mu", mu, "Required density")->capture_default_str();
  rrand->callback([&] {
    action = [&] {
      Outcome o;
      o.report = reduced_to_json(random_reduced(red_m, size_lo, size_hi, red_p, mu, g.seed));
      return o;
    };
  });

  // verify-fact7 -------------------------------------------------------------
  std::size_t resolution = 201;
  double tolerance = 1e-9;
  auto* fact7 = app.add_subcommand("verify-fact7", "Grid scan of the three-variable inequality");
  fact7->add_option("--resolution", resolution, "Grid points per axis")->capture_default_str();
  fact7->add_option("--tolerance", tolerance, "Allowed negative floor")->capture_default_str();
  fact7->callback([&] {
    action = [&] {
      const auto c = exponent_constants();
      const auto m = fact7_scan(resolution, g.threads);
      Json j = envelope("verify-fact7", {{"resolution", resolution}, {"tolerance", tolerance}}, g);
      j["result"] = grid_minimum_to_json(m);
      j["result"]["rho"] = c.rho;
      j["result"]["tau"] = c.tau;
      j["result"]["holds"] = m.value >= -tolerance;
      return Outcome{m.value >= -tolerance ? kAffirmative : kNegative, j, {}};
    };
  });

  // audit-tn -----------------------------------------------------------------
  std::size_t level = 2;
  std::string tn_mode = "exact";
  std::uint64_t samples = 1'000'000;
  bool long_run = false;
  auto* atn = app.add_subcommand("audit-tn", "Check the subset density bound inside T_l");
  atn->add_option("--level", level, "Depth l")->capture_default_str();
  atn->add_option("--mode", tn_mode, "exact | sampled")->capture_default_str()->check(CLI::IsMember({"exact", "sampled"}));
  atn->add_option("--samples", samples, "Random subsets in sampled mode")->capture_default_str();
  atn->add_flag("--long-run", long_run, "Allow the 2^27-subset exact run at level 3");
  atn->callback([&] {
    action = [&] {
      const auto r = tn_density_audit(level, tn_mode == "exact" ? TnAuditMode::exact : TnAuditMode::sampled, samples,
                                      g.seed, long_run);
      Json j = envelope("audit-tn", {{"level", level}, {"mode", tn_mode}, {"samples", samples}, {"long_run", long_run}}, g);
      j["result"] = tn_audit_to_json(r);
      return Outcome{r.violations.empty() ? kAffirmative : kNegative, j, {}};
    };
  });

  // optimality ---------------------------------------------------------------
  std::size_t opt_r = 0, opt_n = 1;
  auto* opt = app.add_subcommand("optimality", "Edge count of {0,1}^r x {0,1,2}^(n-r) inside T_n");
  opt->add_option("--r", opt_r, "Restricted coordinates")->capture_default_str();
  opt->add_option("--n", opt_n, "Depth")->capture_default_str();
  opt->callback([&] {
    action = [&] {
      const auto p = optimality_family(opt_r, opt_n);
      Json j = envelope("optimality", {{"r", opt_r}, {"n", opt_n}}, g);
      j["result"] = optimality_to_json(p);
      const bool agrees = !p.brute_force || BigInt(*p.brute_force) == p.edges;
      return Outcome{agrees ? kAffirmative : kNegative, j, {}};
    };
  });

  // supersat -----------------------------------------------------------------
  std::size_t n_max = 3;
  auto* sup = app.add_subcommand("supersat", "Homomorphism densities of a pattern in T_1..T_nmax");
  sup->add_option("--file", file, "Pattern in HYG format")->required();
  sup->add_option("--nmax", n_max, "Largest depth")->capture_default_str();
  sup->callback([&] {
    action = [&] {
      const auto f = load_hypergraph(file);
      Json j = envelope("supersat", {{"file", file}, {"nmax", n_max}}, g);
      j["result"] = supersaturation_to_json(supersaturation_experiment(f, n_max));
      return Outcome{kAffirmative, j, {}};
    };
  });

  // hom-count / embed --------------------------------------------------------
  std::string host_file;
  auto* hom = app.add_subcommand("hom-count", "Count homomorphisms and embeddings of a pattern into a host");
  hom->add_option("pattern", file, "Pattern in HYG format")->required();
  hom->add_option("host", host_file, "Host in HYG format")->required();
  hom->callback([&] {
    action = [&] {
      const auto f = load_hypergraph(file);
      const auto h = load_hypergraph(host_file);
      Json j = envelope("hom-count", {{"pattern", file}, {"host", host_file}}, g);
      j["result"] = {{"homomorphisms", big_to_json(count_homomorphisms(f, h))},
                     {"embeddings", big_to_json(count_embeddings(f, h))}};
      return Outcome{kAffirmative, j, {}};
    };
  });
  auto* emb = app.add_subcommand("embed", "Find a copy of a pattern inside a host");
  emb->add_option("pattern", file, "Pattern in HYG format")->required();
  emb->add_option("host", host_file, "Host in HYG format")->required();
  emb->callback([&] {
    action = [&] {
      const auto f = load_hypergraph(file);
      const auto h = load_hypergraph(host_file);
      Json j = envelope("embed", {{"pattern", file}, {"host", host_file}}, g);
      auto map = contains_copy(f, h);
      if (map) j["result"] = {{"map", map->image}};
      else j["result"] = "none";
      return Outcome{map ? kAffirmative : kNegative, j, {}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kInputError;
  }

  try {
    Outcome o = action();
    std::string payload = o.report ? o.report->dump(2) + "\n" : o.text;
    if (g.output.empty()) {
      out << payload;
    } else {
      std::ofstream file_out(g.output, std::ios::binary);
      if (!file_out) throw Error("cannot write '" + g.output + "'");
      file_out << payload;
    }
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace udh
