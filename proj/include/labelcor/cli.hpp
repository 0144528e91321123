#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "labelcor/csv.hpp"
#include "labelcor/method.hpp"
#include "labelcor/simgen.hpp"

namespace labelcor::cli {

enum class OutputFormat { json, table };

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

struct RunConfig {
  std::string command;  // cor | permtest | screen | simulate
  std::vector<Method> methods{Method::pcor};
  std::uint64_t seed = 1;
  std::size_t b = 999;
  std::optional<std::size_t> d;
  std::size_t replications = 100;
  OutputFormat format = OutputFormat::json;
  int threads = 0;

  // cor / permtest / screen
  std::string input;
  CsvSchema schema;
  std::string response_column;  // screen: categorical features vs this numeric column
  bool force_bruteforce = false;
  double tie_tolerance = 0.0;
  double sigma2 = 1.0;

  // simulate
  GwasConfig gwas;
  bool fixed_betas = false;
  std::string dump_csv;  // write the first replicate here
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;  // error object when exit_code != 0
};

/// Executes one command. Never throws; failures become an error report.
CommandResult run_command(const RunConfig& cfg);

/// Renders a report (json, or aligned text for the table format).
std::string render(const CommandResult& result, OutputFormat format);

/// Full command line entry point: parse, run, print. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace labelcor::cli
