#include "labelcor/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "labelcor/baselines.hpp"
#include "labelcor/errors.hpp"
#include "labelcor/inference.hpp"
#include "labelcor/screening.hpp"

namespace labelcor::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json dataset_summary(const Dataset& d) {
  json counts = json::object();
  const auto part = class_partition(d);
  for (const auto& cls : part.classes()) counts[cls.name] = cls.size();
  return {{"n", d.n()}, {"p", d.p()}, {"K", d.num_classes()}, {"class_counts", counts}};
}

CorrelationOptions correlation_options(const RunConfig& cfg) {
  CorrelationOptions o;
  o.tie_tolerance = cfg.tie_tolerance;
  o.sigma2 = cfg.sigma2;
  o.force_bruteforce = cfg.force_bruteforce;
  o.threads = cfg.threads;
  return o;
}

std::string pcor_route(const Dataset& d, bool bruteforce) {
  if (bruteforce) return d.p() == 1 ? "univariate_bruteforce" : "multivariate_reference";
  return d.p() == 1 ? "univariate_fast" : "multivariate";
}

json run_cor(const RunConfig& cfg) {
  const Dataset d = load_csv(cfg.input, cfg.schema);
  json values = json::object();
  for (const Method m : cfg.methods) {
    values[std::string(to_string(m))] = correlate(d, m, correlation_options(cfg));
  }
  json report = dataset_summary(d);
  report["values"] = values;
  report["pcor_route"] = pcor_route(d, cfg.force_bruteforce);
  return report;
}

json run_permtest(const RunConfig& cfg) {
  if (cfg.methods.size() != 1) throw UsageError("permtest takes exactly one method");
  const Dataset d = load_csv(cfg.input, cfg.schema);
  const auto res = permutation_test(d, cfg.methods.front(), cfg.b, cfg.seed, correlation_options(cfg));
  json report = dataset_summary(d);
  report["method"] = std::string(to_string(cfg.methods.front()));
  report["statistic"] = res.statistic;
  report["pvalue"] = res.pvalue;
  report["b"] = res.b;
  return report;
}

json ranking_json(const FeatureRanking& r, std::size_t d, const std::vector<std::string>& names) {
  std::vector<std::size_t> order_1based;
  for (const auto j : r.order) order_1based.push_back(j + 1);
  std::vector<std::size_t> top;
  std::vector<std::string> top_names;
  for (const auto j : top_d_select(r, d)) {
    top.push_back(j + 1);
    top_names.push_back(names[j]);
  }
  return {{"method", std::string(to_string(r.method))},
          {"scores", r.scores},
          {"order", order_1based},
          {"top_d", top},
          {"top_d_names", top_names}};
}

json run_screen(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) throw DataError("cannot open " + cfg.input);
  const CsvTable table = read_csv_table(in, cfg.schema.delimiter, cfg.schema.header);
  const auto opts = correlation_options(cfg);

  json report;
  std::vector<std::size_t> features;
  std::vector<std::string> names;
  std::vector<FeatureRanking> rankings;
  std::size_t n = table.rows.size();

  if (!cfg.response_column.empty()) {
    // Categorical features against a numeric response.
    const std::size_t resp = resolve_column(table, cfg.response_column);
    if (cfg.schema.feature_columns.empty()) {
      for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c != resp) features.push_back(c);
      }
    } else {
      for (const auto& s : cfg.schema.feature_columns) features.push_back(resolve_column(table, s));
    }
    const std::size_t resp_col[] = {resp};
    const Matrix y = numeric_columns(table, resp_col);
    const Matrix codes = numeric_columns(table, features);
    for (const Method m : cfg.methods) {
      rankings.push_back(rank_categorical_features(codes, y.data(), m, opts));
    }
    report["mode"] = "categorical_features";
    report["response_column"] = table.header[resp];
  } else {
    // Numeric features against the label column.
    const Dataset d = [&] {
      std::ifstream again(cfg.input);
      return parse_csv(again, cfg.schema);
    }();
    const std::size_t label_col = cfg.schema.label_column.empty()
                                      ? table.header.size() - 1
                                      : resolve_column(table, cfg.schema.label_column);
    if (cfg.schema.feature_columns.empty()) {
      for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c != label_col) features.push_back(c);
      }
    } else {
      for (const auto& s : cfg.schema.feature_columns) features.push_back(resolve_column(table, s));
    }
    for (const Method m : cfg.methods) rankings.push_back(rank_numeric_features(d, m, opts));
    report["mode"] = "numeric_features";
    report["label_column"] = table.header[label_col];
    report["K"] = d.num_classes();
  }
  for (const auto c : features) names.push_back(table.header[c]);

  const std::size_t d = cfg.d.value_or(std::min(default_cutoff(n), features.size()));
  if (d < 1 || d > features.size()) {
    throw UsageError("--d must lie in [1, " + std::to_string(features.size()) + "]");
  }
  json out = json::array();
  for (const auto& r : rankings) out.push_back(ranking_json(r, d, names));
  report["n"] = n;
  report["p"] = features.size();
  report["d"] = d;
  report["rankings"] = out;
  return report;
}

json metrics_json(const ScreeningReport& rep) {
  json j;
  for (std::size_t a = 0; a < rep.active.size(); ++a) {
    j["P" + std::to_string(rep.active[a] + 1)] = rep.p_each[a];
  }
  j["P_all"] = rep.p_all;
  j["MMS"] = rep.mms;
  j["RSD"] = rep.rsd;
  j["min_model_sizes"] = rep.min_model_sizes;
  return j;
}

json run_simulate(const RunConfig& cfg) {
  GwasConfig g = cfg.gwas;
  g.seed = cfg.seed;
  SimulationOptions opts;
  opts.replications = cfg.replications;
  opts.d = cfg.d.value_or(0);
  opts.fixed_betas = cfg.fixed_betas;
  opts.correlation = correlation_options(cfg);
  if (opts.d > g.p) throw UsageError("--d exceeds p");

  if (!cfg.dump_csv.empty()) {
    GwasConfig first = g;
    if (cfg.fixed_betas) {
      auto rng = Xoshiro256::stream(cfg.seed, 0xBE7A5ULL);
      first.betas = draw_gwas_betas(g.n, rng);
    }
    first.seed = derive_seed(cfg.seed, 0);
    const GwasSample s = gen_gwas(first);
    std::vector<std::string> names;
    for (std::size_t j = 0; j < g.p; ++j) names.push_back("Z" + std::to_string(j + 1));
    std::ofstream out(cfg.dump_csv);
    if (!out) throw DataError("cannot write " + cfg.dump_csv);
    write_csv(out, s.features, names, s.response, "y");
  }

  const auto reports = simulate_screening(g, cfg.methods, opts);
  json rep = json::object();
  for (const auto& [m, r] : reports) rep[std::string(to_string(m))] = metrics_json(r);
  return {{"config",
           {{"n", g.n},
            {"p", g.p},
            {"rho", g.rho},
            {"error", std::string(to_string(g.error))},
            {"replications", cfg.replications},
            {"d", opts.d == 0 ? default_cutoff(g.n) : opts.d},
            {"fixed_betas", cfg.fixed_betas},
            {"zero_noise", g.zero_noise}}},
          {"reports", rep}};
}

json error_report(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << (c ? "  " : "") << std::setw(static_cast<int>(width[c]))
         << (c ? std::right : std::left) << r[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

CommandResult run_command(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    if (cfg.methods.empty()) throw UsageError("no method selected");
    if (cfg.command == "cor") {
      result.report = run_cor(cfg);
    } else if (cfg.command == "permtest") {
      result.report = run_permtest(cfg);
    } else if (cfg.command == "screen") {
      result.report = run_screen(cfg);
    } else if (cfg.command == "simulate") {
      result.report = run_simulate(cfg);
    } else {
      throw UsageError("unknown subcommand \"" + cfg.command + "\"");
    }
  } catch (const DataError& e) {
    return {kExitData, error_report("data", e.what())};
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, error_report("usage", e.what())};
  } catch (const std::exception& e) {
    return {kExitData, error_report("data", e.what())};
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  result.report["command"] = cfg.command;
  result.report["seed"] = cfg.seed;
  result.report["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(elapsed).count();
  json methods = json::array();
  for (const Method m : cfg.methods) methods.push_back(std::string(to_string(m)));
  result.report["methods"] = methods;
  return result;
}

std::string render(const CommandResult& result, OutputFormat format) {
  const json& r = result.report;
  if (format == OutputFormat::json) return r.dump(2) + "\n";
  if (r.contains("error")) {
    return "error (" + r["error"]["code"].get<std::string>() + "): " +
           r["error"]["message"].get<std::string>() + "\n";
  }
  const std::string cmd = r.value("command", "");
  std::vector<std::vector<std::string>> rows;
  std::ostringstream head;
  head << cmd << "  seed=" << r["seed"].get<std::uint64_t>();
  if (cmd == "cor") {
    head << "  n=" << r["n"] << "  p=" << r["p"] << "  K=" << r["K"] << "\n";
    rows.push_back({"method", "value"});
    for (const auto& [k, v] : r["values"].items()) rows.push_back({k, format_number(v.get<double>())});
  } else if (cmd == "permtest") {
    head << "  n=" << r["n"] << "  p=" << r["p"] << "  K=" << r["K"] << "\n";
    rows.push_back({"method", "statistic", "pvalue", "B"});
    rows.push_back({r["method"].get<std::string>(), format_number(r["statistic"].get<double>()),
                    format_number(r["pvalue"].get<double>()), std::to_string(r["b"].get<std::size_t>())});
  } else if (cmd == "screen") {
    head << "  n=" << r["n"] << "  p=" << r["p"] << "  d=" << r["d"] << "\n";
    rows.push_back({"method", "top d features"});
    for (const auto& rk : r["rankings"]) {
      std::string names;
      for (const auto& nm : rk["top_d_names"]) names += (names.empty() ? "" : " ") + nm.get<std::string>();
      rows.push_back({rk["method"].get<std::string>(), names});
    }
  } else if (cmd == "simulate") {
    const auto& c = r["config"];
    head << "  n=" << c["n"] << "  p=" << c["p"] << "  error=" << c["error"].get<std::string>()
         << "  reps=" << c["replications"] << "  d=" << c["d"] << "\n";
    std::vector<std::string> header{"method"};
    bool first = true;
    for (const auto& [m, rep] : r["reports"].items()) {
      if (first) {
        for (const auto& [k, v] : rep.items()) {
          if (k != "min_model_sizes") header.push_back(k);
        }
        // P1..P100 before P_all, MMS, RSD
        std::stable_sort(header.begin() + 1, header.end(), [](const std::string& a, const std::string& b) {
          auto rank = [](const std::string& s) {
            if (s == "P_all") return 1000000;
            if (s == "MMS") return 1000001;
            if (s == "RSD") return 1000002;
            return std::stoi(s.substr(1));
          };
          return rank(a) < rank(b);
        });
        rows.push_back(header);
        first = false;
      }
      std::vector<std::string> row{m};
      for (std::size_t h = 1; h < header.size(); ++h) row.push_back(format_number(rep[header[h]].get<double>()));
      rows.push_back(row);
    }
  }
  return head.str() + aligned(rows);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feature-label dependence: label projection correlation and baselines"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::vector<std::string> methods{"pcor"};
  std::string error_dist = "normal";
  std::string delimiter = ",";
  bool no_header = false;
  std::size_t d = 0;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", cfg.threads, "Worker threads (default: $LABELCOR_THREADS or all)")
      ->check(CLI::NonNegativeNumber);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "CSV file")->required()->check(CLI::ExistingFile);
    sub->add_option("--label-col", cfg.schema.label_column, "Label column name or 0-based index");
    sub->add_option("--features", cfg.schema.feature_columns, "Feature columns (default: all others)")
        ->delimiter(',');
    sub->add_option("--delimiter", delimiter, "Field delimiter");
    sub->add_flag("--no-header", no_header, "First row is data");
  };
  auto add_methods = [&](CLI::App* sub) {
    sub->add_option("-m,--method", methods, "pcor, gcor, gkcor, pearson or all")->delimiter(',');
  };
  auto add_estimator_flags = [&](CLI::App* sub) {
    sub->add_flag("--force-bruteforce", cfg.force_bruteforce, "Use the serial reference estimators");
    sub->add_option("--tie-tolerance", cfg.tie_tolerance, "Row equality tolerance for pcor")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--sigma2", cfg.sigma2, "Gaussian kernel bandwidth for gkcor")
        ->check(CLI::PositiveNumber);
  };

  auto* cor = app.add_subcommand("cor", "Correlation between features and label");
  add_input(cor);
  add_methods(cor);
  add_estimator_flags(cor);

  auto* perm = app.add_subcommand("permtest", "Permutation independence test");
  add_input(perm);
  add_methods(perm);
  add_estimator_flags(perm);
  perm->add_option("-b,--b", cfg.b, "Number of permutations (>= 99)");
  perm->add_option("--seed", cfg.seed, "Random seed");

  auto* screen = app.add_subcommand("screen", "Rank features by correlation and select the top d");
  add_input(screen);
  add_methods(screen);
  add_estimator_flags(screen);
  screen->add_option("--response-col", cfg.response_column,
                     "Numeric response; features are then treated as categorical");
  screen->add_option("--d", d, "Cutoff (default floor(n / log n))")->check(CLI::PositiveNumber);

  auto* sim = app.add_subcommand("simulate", "Replicate the GWAS screening design");
  add_methods(sim);
  sim->add_option("--error", error_dist, "Error distribution")
      ->check(CLI::IsMember({"normal", "t1", "t2"}));
  sim->add_option("--reps", cfg.replications, "Replications")->check(CLI::PositiveNumber);
  sim->add_option("--seed", cfg.seed, "Random seed");
  sim->add_option("--n", cfg.gwas.n, "Samples per replication");
  sim->add_option("--p", cfg.gwas.p, "Number of SNPs (>= 100)");
  sim->add_option("--rho", cfg.gwas.rho, "AR(1) correlation");
  sim->add_option("--d", d, "Cutoff (default floor(n / log n))")->check(CLI::PositiveNumber);
  sim->add_flag("--fixed-betas", cfg.fixed_betas, "Draw the coefficients once for all replications");
  sim->add_flag("--zero-noise", cfg.gwas.zero_noise, "Debug: drop the error term");
  sim->add_option("--dump-csv", cfg.dump_csv, "Write the first replication as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << error_report("usage", e.what()).dump(2) << "\n";
    return kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "table" ? OutputFormat::table : OutputFormat::json;
  cfg.schema.header = !no_header;
  if (delimiter.size() != 1) {
    out << error_report("usage", "--delimiter must be one character").dump(2) << "\n";
    return kExitUsage;
  }
  cfg.schema.delimiter = delimiter.front();
  if (d > 0) cfg.d = d;
  cfg.gwas.error = *parse_error_dist(error_dist);

  cfg.methods.clear();
  for (const auto& name : methods) {
    if (name == "all") {
      cfg.methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
      break;
    }
    const auto m = parse_method(name);
    if (!m) {
      out << error_report("usage", "unknown method \"" + name + "\"").dump(2) << "\n";
      return kExitUsage;
    }
    cfg.methods.push_back(*m);
  }

  const CommandResult result = run_command(cfg);
  if (result.exit_code != kExitOk) err << render(result, OutputFormat::table);
  out << render(result, cfg.format);
  return result.exit_code;
}

}  // namespace labelcor::cli
