#include "biasmatch/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "biasmatch/constructor.hpp"
#include "biasmatch/exactmath.hpp"
#include "biasmatch/hypergraph.hpp"
#include "biasmatch/oracle.hpp"
#include "biasmatch/randomized.hpp"
#include "biasmatch/search_budget.hpp"
#include "biasmatch/thresholds.hpp"

namespace biasmatch {

namespace {

using nlohmann::ordered_json;

ordered_json pair_json(const ValidPair& p) {
  return ordered_json{{"pair", p.str()}, {"j", p.j}, {"sigma", p.sigma}};
}

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : edges) {
    ordered_json row = ordered_json::array();
    row.push_back(e.colour);
    for (int v : e.verts) row.push_back(v);
    arr.push_back(std::move(row));
  }
  return arr;
}

ordered_json matching_json(const Matching& m) {
  return ordered_json{{"edges", edges_json(m.edges)},
                      {"colour_profile", m.colour_profile}};
}

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ColouredHypergraph load_instance(const std::string& path) {
  if (path == "-") return parse_any(read_stream(std::cin));
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  return parse_any(read_stream(f));
}

void emit_instance(const ColouredHypergraph& h, const std::string& format, std::ostream& out) {
  if (format == "text")
    out << to_text(h);
  else if (format == "json")
    out << to_json_text(h);
  else
    throw std::invalid_argument("unknown instance format: " + format);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + " must be a non-negative integer, got '" + text + "'");
  }
}

// Optional presets shared with sweep scripts; command-line flags override.
struct Presets {
  std::optional<std::uint64_t> budget, seed, max_nodes;
  std::optional<int> jobs, samples, switcher_budget;
};

Presets load_presets(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_stream(f));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
  Presets p;
  if (j.contains("budget")) p.budget = j["budget"].get<std::uint64_t>();
  if (j.contains("seed")) p.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("max_nodes")) p.max_nodes = j["max_nodes"].get<std::uint64_t>();
  if (j.contains("jobs")) p.jobs = j["jobs"].get<int>();
  if (j.contains("samples")) p.samples = j["samples"].get<int>();
  if (j.contains("switcher_budget")) p.switcher_budget = j["switcher_budget"].get<int>();
  return p;
}

void append_results_line(const std::string& path, const ordered_json& record) {
  std::ofstream f(path, std::ios::app);
  if (!f) throw std::invalid_argument("cannot open results file: " + path);
  f << record.dump() << "\n";
}

long long wall_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "biasmatch: exact minimum-degree thresholds and brute-force oracles for "
      "colour-bias perfect matchings in r-edge-coloured k-uniform hypergraphs"};
  app.name("biasmatch");
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON presets {budget, seed, jobs, samples, max_nodes, switcher_budget}; "
                 "explicit flags win");
  std::uint64_t budget_flag = 0;
  CLI::Option* budget_opt =
      app.add_option("--budget", budget_flag, "global search-node cap (also BIASMATCH_BUDGET)");

  // ---- table ----
  auto* c_table = app.add_subcommand(
      "table", "threshold grid f_{k,r} (k=3..kmax, r=2..rmax) with conjectured thresholds m'_k");
  int t_kmax = 22, t_rmax = 10, t_jobs = 1;
  std::string t_format = "csv";
  c_table->add_option("--kmax", t_kmax, "largest k (default 22)");
  c_table->add_option("--rmax", t_rmax, "largest r (default 10)");
  CLI::Option* t_jobs_opt = c_table->add_option("--jobs", t_jobs, "worker threads (default 1)");
  c_table->add_option("--format", t_format, "csv | json (default csv)");

  // ---- fkr ----
  auto* c_fkr = app.add_subcommand("fkr", "exact f_{k,r} with its maximizing pairs");
  int f_k = 0, f_r = 0;
  c_fkr->add_option("k", f_k, "uniformity")->required();
  c_fkr->add_option("r", f_r, "number of colours")->required();

  // ---- mconj ----
  auto* c_mconj = app.add_subcommand(
      "mconj", "conjectured minimum ell-degree matching threshold max{1/2, 1-((k-1)/k)^(k-ell)}");
  int m_ell = 0, m_k = 0;
  c_mconj->add_option("ell", m_ell, "degree order")->required();
  c_mconj->add_option("k", m_k, "uniformity")->required();

  // ---- classify ----
  auto* c_classify = app.add_subcommand(
      "classify", "compare f_{k,r} with m'_k and report the bias threshold b_{k,r}");
  int cl_k = 0, cl_r = 0;
  c_classify->add_option("k", cl_k, "uniformity")->required();
  c_classify->add_option("r", cl_r, "number of colours")->required();

  // ---- construct ----
  auto* c_construct =
      app.add_subcommand("construct", "edge-maximal family member for (k, r, pair, n)");
  int co_k = 0, co_r = 0;
  long long co_n = 0;
  std::string co_pair, co_format = "text";
  c_construct->add_option("--k", co_k, "uniformity")->required();
  c_construct->add_option("--r", co_r, "number of colours")->required();
  c_construct->add_option("--pair", co_pair, "pair \"j1,j2,...;+1|-1\"")->required();
  c_construct->add_option("--n", co_n, "vertex count (multiple of k*r)")->required();
  c_construct->add_option("--format", co_format, "text | json (default text)");

  // ---- mindeg ----
  auto* c_mindeg = app.add_subcommand("mindeg", "minimum ell-degree by brute force");
  int md_ell = 1;
  std::string md_input = "-";
  c_mindeg->add_option("--ell", md_ell, "degree order (default 1)");
  c_mindeg->add_option("--input", md_input, "instance file or - for stdin (default -)");

  // ---- verify-balance ----
  auto* c_balance = app.add_subcommand(
      "verify-balance",
      "enumerate all perfect matchings of a family member and check the forced colour profile");
  int vb_k = 0, vb_r = 0;
  long long vb_n = 0;
  std::string vb_pair, vb_alpha, vb_input;
  c_balance->add_option("--k", vb_k, "uniformity");
  c_balance->add_option("--r", vb_r, "number of colours");
  c_balance->add_option("--pair", vb_pair, "pair \"j1,j2,...;+1|-1\"");
  c_balance->add_option("--n", vb_n, "vertex count (multiple of k*r)");
  c_balance->add_option("--alpha", vb_alpha,
                        "comma-separated rationals, one per colour (default 1/r each)");
  c_balance->add_option("--input", vb_input,
                        "check a supplied member instead of building one (file or -)");

  // ---- find-switcher ----
  auto* c_switcher = app.add_subcommand(
      "find-switcher", "minimum-order switcher (two same-support matchings with differing "
                       "colour counts), exhaustively");
  std::string fs_input = "-";
  int fs_max_order = -1;
  c_switcher->add_option("--input", fs_input, "instance file or - for stdin (default -)");
  c_switcher->add_option("--max-order", fs_max_order, "largest support size (default k^2+k)");

  // ---- membership ----
  auto* c_member = app.add_subcommand(
      "membership", "search for a partition and k-valid pair certifying family membership");
  std::string mb_input = "-";
  bool mb_unguarded = false;
  c_member->add_option("--input", mb_input, "instance file or - for stdin (default -)");
  c_member->add_flag("--unguarded", mb_unguarded, "lift the n <= 12 size guard");

  // ---- disjoint-nbhd ----
  auto* c_nbhd = app.add_subcommand(
      "disjoint-nbhd", "maximum pairwise-disjoint packing of common (k-1)-neighbourhood sets");
  std::string dn_input = "-";
  int dn_x = 0, dn_y = 0;
  c_nbhd->add_option("--input", dn_input, "instance file or - for stdin (default -)");
  c_nbhd->add_option("--x", dn_x, "first vertex")->required();
  c_nbhd->add_option("--y", dn_y, "second vertex")->required();

  // ---- sample ----
  auto* c_sample = app.add_subcommand(
      "sample", "binomial random k-graph H_k(n,p) from the documented deterministic generator");
  int sm_n = 0, sm_k = 0, sm_colours = 0;
  std::string sm_p, sm_format = "text";
  std::uint64_t sm_seed = 0, sm_colour_seed = 0;
  c_sample->add_option("--n", sm_n, "vertex count")->required();
  c_sample->add_option("--k", sm_k, "uniformity")->required();
  c_sample->add_option("--p", sm_p, "edge probability as a rational p/q")->required();
  CLI::Option* sm_seed_opt = c_sample->add_option("--seed", sm_seed, "generator seed (default 0)");
  c_sample->add_option("--colours", sm_colours,
                       "also colour the sampled edges uniformly at random with this many colours");
  c_sample->add_option("--colour-seed", sm_colour_seed,
                       "seed for the colouring pass (default 0)");
  c_sample->add_option("--format", sm_format, "text | json (default text)");

  // ---- check-random ----
  auto* c_check = app.add_subcommand(
      "check-random",
      "edge-in-every-large-set and common-neighbourhood-in-every-large-set properties");
  std::string cr_input = "-", cr_p, cr_results;
  int cr_r = 0, cr_samples = 2000;
  bool cr_sampled = false;
  std::uint64_t cr_seed = 0;
  c_check->add_option("--r", cr_r, "number of colours entering the size threshold")->required();
  c_check->add_option("--input", cr_input, "instance file or - for stdin (default -)");
  c_check->add_flag("--sampled", cr_sampled, "sampling mode (required for n > 14)");
  CLI::Option* cr_samples_opt =
      c_check->add_option("--samples", cr_samples, "probes per property in sampling mode");
  CLI::Option* cr_seed_opt = c_check->add_option("--seed", cr_seed, "sampling seed (default 0)");
  c_check->add_option("--p", cr_p, "edge probability recorded in the results line (metadata)");
  c_check->add_option("--results", cr_results, "append a JSON-lines record to this file");

  // ---- bias-search ----
  auto* c_bias = app.add_subcommand(
      "bias-search", "constructive search for a colour-biased perfect matching via switchers");
  std::string bs_input = "-", bs_gamma = "0", bs_p, bs_results;
  int bs_switcher_budget = -1;
  std::uint64_t bs_seed = 0, bs_max_nodes = UINT64_MAX;
  c_bias->add_option("--input", bs_input, "instance file or - for stdin (default -)");
  c_bias->add_option("--gamma", bs_gamma, "target bias gamma (rational; goal is gamma*n)");
  CLI::Option* bs_sb_opt = c_bias->add_option("--switcher-budget", bs_switcher_budget,
                                              "largest switcher order (default k^2+k)");
  CLI::Option* bs_seed_opt =
      c_bias->add_option("--seed", bs_seed, "seed for the residual heuristic (default 0)");
  CLI::Option* bs_mn_opt =
      c_bias->add_option("--max-nodes", bs_max_nodes, "residual-heuristic node cap");
  c_bias->add_option("--p", bs_p, "edge probability recorded in the results line (metadata)");
  c_bias->add_option("--results", bs_results, "append a JSON-lines record to this file");

  // ---- tight-cycle-example ----
  auto* c_tight = app.add_subcommand(
      "tight-cycle-example",
      "two-part 4-graph (|V1|=7n/8, |V2|=n/8) whose minimum degree ratio tends to 365/512");
  long long tc_n = 0;
  bool tc_mindeg = false;
  std::string tc_format = "text";
  c_tight->add_option("--n", tc_n, "vertex count (multiple of 8)")->required();
  c_tight->add_flag("--mindeg", tc_mindeg, "report the minimum-degree analysis instead");
  c_tight->add_option("--format", tc_format, "text | json (default text)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Presets presets;
    if (!config_path.empty()) presets = load_presets(config_path);

    // Global node budget: the smallest of the environment variable, the
    // --budget flag, and the config preset that are present.
    SearchBudget budget;
    if (const char* env = std::getenv("BIASMATCH_BUDGET"); env && *env)
      budget.limit = std::min(budget.limit, parse_u64(env, "BIASMATCH_BUDGET"));
    if (budget_opt->count() > 0)
      budget.limit = std::min(budget.limit, budget_flag);
    else if (presets.budget)
      budget.limit = std::min(budget.limit, *presets.budget);

    const auto t0 = std::chrono::steady_clock::now();

    if (*c_table) {
      const int jobs = t_jobs_opt->count() > 0 ? t_jobs : presets.jobs.value_or(1);
      const auto rows = threshold_table(t_kmax, t_rmax, jobs);
      if (t_format == "csv")
        out << table_csv(rows);
      else if (t_format == "json")
        out << table_json(rows);
      else
        throw std::invalid_argument("unknown table format: " + t_format);
      return 0;
    }

    if (*c_fkr) {
      const FkrResult res = f_kr(f_k, f_r);
      ordered_json payload{{"command", "fkr"},
                           {"k", f_k},
                           {"r", f_r},
                           {"f", res.value.str()},
                           {"decimal", res.value.decimal_truncated(4)}};
      ordered_json argmax = ordered_json::array();
      for (const auto& p : res.argmax) argmax.push_back(pair_json(p));
      payload["argmax"] = std::move(argmax);
      out << payload.dump(2) << "\n";
      return 0;
    }

    if (*c_mconj) {
      const Rational v = m_conjectured(m_ell, m_k);
      ordered_json payload{{"command", "mconj"},
                           {"ell", m_ell},
                           {"k", m_k},
                           {"value", v.str()},
                           {"decimal", v.decimal_truncated(4)}};
      out << payload.dump(2) << "\n";
      return 0;
    }

    if (*c_classify) {
      const ThresholdReport rep = classify(cl_k, cl_r);
      ordered_json payload{{"command", "classify"},
                           {"k", rep.k},
                           {"r", rep.r},
                           {"f_kr", rep.f_kr.str()},
                           {"f_kr_decimal", rep.f_kr.decimal_truncated(4)},
                           {"m_prime", rep.m_prime.str()},
                           {"m_prime_decimal", rep.m_prime.decimal_truncated(4)},
                           {"b_kr", rep.b_kr.str()},
                           {"b_kr_decimal", rep.b_kr.decimal_truncated(4)},
                           {"classification", classification_name(rep.classification)},
                           {"conditional_on_conjecture", rep.conditional_on_conjecture}};
      ordered_json argmax = ordered_json::array();
      for (const auto& p : rep.argmax_pairs) argmax.push_back(pair_json(p));
      payload["argmax"] = std::move(argmax);
      out << payload.dump(2) << "\n";
      return 0;
    }

    if (*c_construct) {
      const ExtremalSpec spec = make_extremal_spec(co_k, co_r, parse_pair(co_pair), co_n);
      const ColouredHypergraph h = build_extremal(spec, &err);
      emit_instance(h, co_format, out);
      return 0;
    }

    if (*c_mindeg) {
      const ColouredHypergraph h = load_instance(md_input);
      const MinDegreeResult res = min_degree(h, md_ell);
      ordered_json payload{{"command", "mindeg"},   {"instance_digest", instance_digest(h)},
                           {"n", h.n},              {"k", h.k},
                           {"r", h.r},              {"ell", md_ell},
                           {"min_degree", res.value}, {"witness", res.witness}};
      out << payload.dump(2) << "\n";
      return 0;
    }

    if (*c_balance) {
      BalanceReport rep;
      ordered_json query;
      int r_used = 0;
      if (!vb_input.empty()) {
        const ColouredHypergraph h = load_instance(vb_input);
        r_used = h.r;
        std::vector<Rational> alpha =
            vb_alpha.empty() ? std::vector<Rational>(h.r, Rational(1, h.r))
                             : parse_rational_list(vb_alpha);
        rep = verify_balance(h, alpha, &budget);
        query = ordered_json{{"instance_digest", instance_digest(h)}, {"n", h.n}};
      } else {
        if (vb_k == 0 || vb_r == 0 || vb_pair.empty() || vb_n == 0)
          throw std::invalid_argument(
              "verify-balance needs --k --r --pair --n (or --input)");
        const ExtremalSpec spec = make_extremal_spec(vb_k, vb_r, parse_pair(vb_pair), vb_n);
        r_used = vb_r;
        std::vector<Rational> alpha =
            vb_alpha.empty() ? std::vector<Rational>(vb_r, Rational(1, vb_r))
                             : parse_rational_list(vb_alpha);
        rep = verify_balance(spec, alpha, &budget);
        query = ordered_json{{"k", vb_k}, {"r", vb_r}, {"pair", vb_pair}, {"n", vb_n}};
      }
      ordered_json payload{{"command", "verify-balance"}, {"query", std::move(query)}};
      {
        ordered_json alphas = ordered_json::array();
        if (vb_alpha.empty())
          for (int i = 0; i < r_used; ++i) alphas.push_back(Rational(1, r_used).str());
        else
          for (const auto& a : parse_rational_list(vb_alpha)) alphas.push_back(a.str());
        payload["alpha"] = std::move(alphas);
      }
      payload["expected_profile"] = rep.expected_profile;
      payload["matchings_checked"] = rep.matchings_checked;
      payload["all_balanced"] = rep.all_balanced;
      payload["violations_total"] = rep.violations_total;
      ordered_json viols = ordered_json::array();
      for (const auto& v : rep.violations)
        viols.push_back(ordered_json{{"colour", v.colour},
                                     {"observed", v.observed},
                                     {"expected", v.expected},
                                     {"matching", matching_json(v.matching)}});
      payload["violations"] = std::move(viols);
      out << payload.dump(2) << "\n";
      return rep.all_balanced ? 0 : 1;
    }

    if (*c_switcher) {
      const ColouredHypergraph h = load_instance(fs_input);
      const int max_order = fs_max_order < 0 ? h.k * h.k + h.k : fs_max_order;
      const std::optional<Switcher> sw = find_switcher(h, max_order, &budget);
      ordered_json payload{{"command", "find-switcher"},
                           {"instance_digest", instance_digest(h)},
                           {"max_order", max_order},
                           {"found", sw.has_value()}};
      payload["switcher"] =
          sw ? ordered_json{{"order", sw->order},
                            {"colour", sw->colour},
                            {"m1", matching_json(sw->m1)},
                            {"m2", matching_json(sw->m2)}}
             : ordered_json(nullptr);
      payload["nodes"] = budget.used;
      out << payload.dump(2) << "\n";
      return 0;
    }

    if (*c_member) {
      const ColouredHypergraph h = load_instance(mb_input);
      const std::optional<MembershipWitness> w = family_membership(h, &budget, mb_unguarded);
      ordered_json payload{{"command", "membership"},
                           {"instance_digest", instance_digest(h)},
                           {"member", w.has_value()}};
      if (w) {
        payload["pair"] = pair_json(w->pair);
        payload["parts"] = w->part_of;
      } else {
        payload["pair"] = nullptr;
        payload["parts"] = nullptr;
      }
      payload["nodes"] = budget.used;
      out << payload.dump(2) << "\n";
      return 0;
    }

    if (*c_nbhd) {
      const ColouredHypergraph h = load_instance(dn_input);
      const DisjointNbhdResult res = disjoint_common_neighbourhood(h, dn_x, dn_y, &budget);
      ordered_json payload{{"command", "disjoint-nbhd"},
                           {"instance_digest", instance_digest(h)},
                           {"x", dn_x},
                           {"y", dn_y},
                           {"value", res.value},
                           {"exhaustive", res.exhaustive},
                           {"witness", res.witness},
                           {"nodes", budget.used}};
      out << payload.dump(2) << "\n";
      return 0;
    }

    if (*c_sample) {
      const std::uint64_t seed =
          sm_seed_opt->count() > 0 ? sm_seed : presets.seed.value_or(sm_seed);
      ColouredHypergraph h = sample_hkp(sm_n, sm_k, Rational::parse(sm_p), seed);
      if (sm_colours > 0) h = colour_edges_random(h, sm_colours, sm_colour_seed);
      emit_instance(h, sm_format, out);
      return 0;
    }

    if (*c_check) {
      const ColouredHypergraph h = load_instance(cr_input);
      PropertyCheckOptions options;
      options.sampled = cr_sampled;
      options.samples = cr_samples_opt->count() > 0 ? cr_samples : presets.samples.value_or(2000);
      options.seed = cr_seed_opt->count() > 0 ? cr_seed : presets.seed.value_or(0);
      options.budget = &budget;
      const PropertyReport rep = check_random_properties(h, cr_r, options);
      ordered_json payload{{"command", "check-random"},
                           {"instance_digest", instance_digest(h)},
                           {"r", cr_r},
                           {"sampled", rep.sampled},
                           {"property_i", rep.property_i},
                           {"property_ii", rep.property_ii}};
      payload["independent_witness"] =
          rep.independent_witness ? ordered_json(*rep.independent_witness)
                                  : ordered_json(nullptr);
      payload["witness_ii"] = rep.witness_ii
                                  ? ordered_json{{"x", rep.witness_ii->x},
                                                 {"y", rep.witness_ii->y},
                                                 {"avoid_set", rep.witness_ii->avoid_set}}
                                  : ordered_json(nullptr);
      payload["nodes"] = rep.nodes;
      out << payload.dump(2) << "\n";
      if (!cr_results.empty()) {
        ordered_json record{{"n", h.n},
                            {"k", h.k},
                            {"r", cr_r},
                            {"p", cr_p.empty() ? ordered_json(nullptr) : ordered_json(cr_p)},
                            {"seed", options.seed},
                            {"property_i", rep.property_i},
                            {"property_ii", rep.property_ii},
                            {"bias", nullptr},
                            {"wall_time_ms", wall_ms_since(t0)}};
        append_results_line(cr_results, record);
      }
      return rep.property_i && rep.property_ii ? 0 : 1;
    }

    if (*c_bias) {
      const ColouredHypergraph h = load_instance(bs_input);
      BiasSearchConfig config;
      config.gamma_target = Rational::parse(bs_gamma);
      config.switcher_budget =
          bs_sb_opt->count() > 0 ? bs_switcher_budget : presets.switcher_budget.value_or(-1);
      config.seed = bs_seed_opt->count() > 0 ? bs_seed : presets.seed.value_or(0);
      config.max_nodes =
          bs_mn_opt->count() > 0 ? bs_max_nodes : presets.max_nodes.value_or(UINT64_MAX);
      config.budget = &budget;
      BiasSearchResult res;
      try {
        res = bias_search(h, config);
      } catch (const NoResidualMatchingError& e) {
        err << "error: " << e.what() << "\n";
        ordered_json payload{{"command", "bias-search"},
                             {"instance_digest", instance_digest(h)},
                             {"error", "no_residual_matching"}};
        out << payload.dump(2) << "\n";
        return 1;
      }
      ordered_json payload{{"command", "bias-search"},
                           {"instance_digest", instance_digest(h)},
                           {"gamma_target", config.gamma_target.str()},
                           {"switcher_budget",
                            config.switcher_budget < 0 ? h.k * h.k + h.k : config.switcher_budget},
                           {"seed", config.seed},
                           {"bias", res.bias.str()},
                           {"bias_decimal", res.bias.decimal_truncated(4)},
                           {"counts", res.counts},
                           {"majority_colour", res.majority_colour},
                           {"switchers_used", res.switchers_used},
                           {"met_target", res.met_target},
                           {"nodes", res.nodes},
                           {"matching", matching_json(res.matching)}};
      out << payload.dump(2) << "\n";
      if (!bs_results.empty()) {
        ordered_json record{{"n", h.n},
                            {"k", h.k},
                            {"r", h.r},
                            {"p", bs_p.empty() ? ordered_json(nullptr) : ordered_json(bs_p)},
                            {"seed", config.seed},
                            {"property_i", nullptr},
                            {"property_ii", nullptr},
                            {"bias", res.bias.str()},
                            {"wall_time_ms", wall_ms_since(t0)}};
        append_results_line(bs_results, record);
      }
      return res.met_target ? 0 : 1;
    }

    if (*c_tight) {
      const ColouredHypergraph h = build_tight_cycle_counterexample(tc_n, &err);
      if (!tc_mindeg) {
        emit_instance(h, tc_format, out);
        return 0;
      }
      const MinDegreeResult res = min_degree(h, 1);
      const BigInt denom = binomial(h.n - 1, h.k - 1);
      const Rational ratio(res.value, denom);
      const Rational limit(365, 512);
      ordered_json payload{{"command", "tight-cycle-example"},
                           {"n", h.n},
                           {"min_degree", res.value},
                           {"witness", res.witness},
                           {"denominator", denom.str()},
                           {"ratio", ratio.str()},
                           {"ratio_decimal", ratio.decimal_truncated(4)},
                           {"limit", limit.str()},
                           {"limit_decimal", limit.decimal_truncated(4)}};
      out << payload.dump(2) << "\n";
      return 0;
    }

    err << "error: no subcommand dispatched\n";
    return 2;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace biasmatch
