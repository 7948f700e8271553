#include "jacgb/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "jacgb/json_io.hpp"
#include "jacgb/parallel.hpp"
#include "jacgb/text_io.hpp"

namespace jacgb {

namespace {

int emit(const RunConfig& config, const std::string& document, std::ostream& out,
         std::ostream& err) {
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file " << *config.output_path << "\n";
      return 1;
    }
    file << document;
    return file.good() ? 0 : 1;
  }
  out << document;
  return 0;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const int threads = resolve_threads(config.threads);
  try {
    switch (config.command) {
      case RunConfig::Command::system: {
        SystemInstance sys = build_system(config.m);
        return emit(config, config.json ? dump(to_json(sys)) : render_system(sys),
                    out, err);
      }
      case RunConfig::Command::groebner: {
        GroebnerResult gr = reduce_basis(build_system(config.m));
        return emit(config, config.json ? dump(to_json(gr)) : render_groebner(gr),
                    out, err);
      }
      case RunConfig::Command::check_gb: {
        SystemInstance sys = build_system(config.m);
        // The basis claim covers E_1..E_{m-1}.
        std::vector<Polynomial> gens(sys.equations.begin(),
                                     sys.equations.end() - 2);
        BuchbergerReport report = buchberger_check(gens, true, threads);
        int rc = emit(config,
                      config.json ? dump(to_json(report)) : render_buchberger(report),
                      out, err);
        return report.is_basis ? rc : (rc != 0 ? rc : 1);
      }
      case RunConfig::Command::solve: {
        GroebnerResult gr = reduce_basis(build_system(config.m));
        Analysis analysis = analyze(gr, config.tol, config.seed);
        if (config.json) {
          Json j;
          j["analysis"] = to_json(analysis);
          j["y_sample"] = to_json(config.y_sample);
          Json values = Json::array();
          for (const SolutionBranch& b : analysis.branches) {
            if (b.degenerate) {
              values.push_back(nullptr);
              continue;
            }
            Json row = Json::array();
            for (const auto& v : evaluate_branch(b, gr, config.y_sample))
              row.push_back(to_json(v));
            values.push_back(std::move(row));
          }
          j["branch_values"] = std::move(values);
          return emit(config, dump(j), out, err);
        }
        return emit(config, render_analysis(analysis), out, err);
      }
      case RunConfig::Command::verify: {
        SystemInstance sys = build_system(config.m);
        GroebnerResult gr = reduce_basis(sys);
        Analysis analysis = analyze(gr, config.tol, config.seed);
        VerificationReport report = verify_branches(sys, gr, analysis,
                                                    config.y_sample, config.tol,
                                                    threads);
        int rc = emit(config,
                      config.json ? dump(to_json(report)) : render_verification(report),
                      out, err);
        return report.bounds_ok ? rc : (rc != 0 ? rc : 1);
      }
      case RunConfig::Command::table: {
        GroebnerResult gr = reduce_basis(build_system(config.m));
        if (config.json) {
          Json j = Json::array();
          for (int k = 1; k <= 5 && k <= gr.m + 1; ++k)
            j.push_back(to_json(gr.tildeE[static_cast<std::size_t>(k) - 1]));
          return emit(config, dump(j), out, err);
        }
        return emit(config, render_tilde_table(gr), out, err);
      }
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace jacgb
