#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

namespace jacgb {

// One parsed invocation. run() performs the whole stage and writes a single
// document; identical configs produce byte-identical output regardless of
// the thread count.
struct RunConfig {
  enum class Command { system, groebner, check_gb, solve, verify, table };

  Command command = Command::table;
  int m = 10;
  std::complex<double> y_sample{1.0, 0.0};
  double tol = 1e-9;
  bool json = false;
  std::optional<std::string> output_path;
  int threads = 0;          // 0: fall back to JACGB_THREADS, then 1
  unsigned seed = 20140603; // root-finder starting points
};

// Exit codes: 0 success, 1 failed check (non-basis, bound violation,
// numeric failure), 2 invalid parameter (e.g. m outside 3∤m>3).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace jacgb
