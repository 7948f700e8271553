// Command-line front end: system generation, basis reduction, basis
// checking, solution enumeration and numeric verification, with JSON or
// text output.

#include <CLI11.hpp>

#include <complex>
#include <iostream>
#include <sstream>

#include "jacgb/cli.hpp"

namespace {

std::complex<double> parse_complex(const std::string& s) {
  // "re" or "re,im"
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw CLI::ValidationError("--y-sample", "expected re[,im]");
  if (is >> comma) {
    if (comma != ',' || !(is >> im))
      throw CLI::ValidationError("--y-sample", "expected re[,im]");
  }
  return {re, im};
}

void add_common(CLI::App* cmd, jacgb::RunConfig& config, std::string& y_text,
                std::string& format, bool with_numeric) {
  cmd->add_option("--m", config.m, "system parameter m (requires 3∤m>3)");
  cmd->add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag_callback("--json", [&format]() { format = "json"; },
                         "shorthand for --format json");
  cmd->add_flag_callback("--text", [&format]() { format = "text"; },
                         "shorthand for --format text");
  cmd->add_option("--output,-o", "write the document to a file")
      ->type_name("FILE")
      ->each([&config](const std::string& v) { config.output_path = v; });
  cmd->add_option("--threads", config.threads,
                  "worker threads (JACGB_THREADS as fallback, default 1)");
  if (with_numeric) {
    cmd->add_option("--y-sample", y_text, "evaluation point for y, re[,im]");
    cmd->add_option("--tol", config.tol, "numeric tolerance");
    cmd->add_option("--seed", config.seed, "root-finder starting-point seed");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for the power-series coefficient system: "
               "generation, reduced basis, and solution branches"};
  app.require_subcommand(1);

  jacgb::RunConfig config;
  std::string y_text;
  std::string format = "text";

  auto* sys = app.add_subcommand("system", "emit the equation system E_1..E_{m+1}");
  add_common(sys, config, y_text, format, false);
  auto* gb = app.add_subcommand("groebner",
                                "emit the reduced basis, remainders and "
                                "lambda tables");
  add_common(gb, config, y_text, format, false);
  auto* check = app.add_subcommand("check-gb",
                                   "run the S-pair criterion on E_1..E_{m-1}; "
                                   "nonzero exit on failure");
  add_common(check, config, y_text, format, false);
  auto* solve = app.add_subcommand("solve",
                                   "enumerate all solution branches with "
                                   "case analysis and root data");
  add_common(solve, config, y_text, format, true);
  auto* verify = app.add_subcommand("verify",
                                    "substitute every branch into the system "
                                    "and report residuals");
  add_common(verify, config, y_text, format, true);
  auto* table = app.add_subcommand("table",
                                   "print the first five reduced basis elements");
  add_common(table, config, y_text, format, false);

  CLI11_PARSE(app, argc, argv);

  if (sys->parsed()) config.command = jacgb::RunConfig::Command::system;
  if (gb->parsed()) config.command = jacgb::RunConfig::Command::groebner;
  if (check->parsed()) config.command = jacgb::RunConfig::Command::check_gb;
  if (solve->parsed()) config.command = jacgb::RunConfig::Command::solve;
  if (verify->parsed()) config.command = jacgb::RunConfig::Command::verify;
  if (table->parsed()) config.command = jacgb::RunConfig::Command::table;

  config.json = format == "json";
  try {
    if (!y_text.empty()) config.y_sample = parse_complex(y_text);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return jacgb::run(config, std::cout, std::cerr);
}
