// macring: integral cohomology of moment-angle complexes from a simplicial
// complex given as {"m": M, "facets": [[...], ...]}.
//
// Exit codes: 0 success, 1 unusable input, 2 a verification suite failed,
// 3 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macring/macring.hpp"

namespace {

struct RunConfig {
  enum class Command { kBetti, kRing, kVerify, kCells };
  Command command = Command::kBetti;
  std::string input_path;
  std::string format = "table";
  bool force = false;
  bool suite_hochster = false;
  bool suite_homotopy = false;
  bool suite_diagonal = false;
  bool suite_axioms = false;
  int truncate = 0;  // 0 = default budget 2m+2
};

macring::SimplicialComplex load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw macring::ParseError(path + ": cannot open");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return macring::SimplicialComplex::parse(text);
  } catch (const macring::ParseError& e) {
    throw macring::ParseError(path + ": " + e.what());
  }
}

// m > 20 makes the 3^m-cell algebra explode; demand an explicit opt-in.
void check_size_guard(const macring::SimplicialComplex& k, bool force, const char* command) {
  if (k.m() <= 20 || force) return;
  throw macring::ParseError(std::string(command) + ": m = " + std::to_string(k.m()) +
                            " exceeds the size guard (20); pass --force to proceed");
}

int run(const RunConfig& cfg) {
  using macring::SuiteResult;
  auto k = load(cfg.input_path);
  switch (cfg.command) {
    case RunConfig::Command::kBetti: {
      check_size_guard(k, cfg.force, "betti");
      auto tbl = macring::bigraded_cohomology(k);
      if (cfg.format == "json")
        std::cout << macring::betti_to_json(tbl).dump(2) << "\n";
      else
        std::cout << macring::betti_table_text(tbl);
      return 0;
    }
    case RunConfig::Command::kRing: {
      check_size_guard(k, cfg.force, "ring");
      auto rp = macring::ring_presentation(k);
      if (cfg.format == "json")
        std::cout << macring::ring_to_json(rp).dump(2) << "\n";
      else
        std::cout << macring::ring_table_text(rp);
      return 0;
    }
    case RunConfig::Command::kCells: {
      if (cfg.format == "json")
        std::cout << macring::cells_to_json(k).dump(2) << "\n";
      else
        std::cout << macring::cells_table_text(k);
      return 0;
    }
    case RunConfig::Command::kVerify: {
      // Truncating E_m at total degree N validates the homotopy identity on
      // elements of degree <= N - 2 (s lowers degree, d raises it); the
      // default budget is N = 2m + 2.
      int n_budget = cfg.truncate > 0 ? cfg.truncate : 2 * k.m() + 2;
      int bound = n_budget - 2;
      if (bound < 0) bound = 0;
      std::vector<SuiteResult> suites;
      if (cfg.suite_hochster) suites.push_back(macring::verify_hochster(k));
      if (cfg.suite_homotopy) suites.push_back(macring::verify_homotopy(k, bound));
      if (cfg.suite_diagonal) suites.push_back(macring::verify_diagonal(k));
      if (cfg.suite_axioms) suites.push_back(macring::verify_axioms(k));
      if (cfg.format == "json")
        std::cout << macring::verify_to_json(suites).dump(2) << "\n";
      else
        std::cout << macring::verify_table_text(suites);
      for (const SuiteResult& s : suites)
        if (!s.pass) return 2;
      return 0;
    }
  }
  throw macring::InternalError("run: unreachable command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral cohomology of moment-angle complexes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("input", cfg.input_path, "complex JSON file")->required();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val("table");
  };

  CLI::App* betti = app.add_subcommand("betti", "bigraded cohomology groups");
  add_common(betti);
  betti->add_flag("--force", cfg.force, "ignore the m > 20 size guard");

  CLI::App* ring = app.add_subcommand("ring", "generators and the multiplication table");
  add_common(ring);
  ring->add_flag("--force", cfg.force, "ignore the m > 20 size guard");

  CLI::App* cellsc = app.add_subcommand("cells", "cell census of Z_K");
  add_common(cellsc);

  CLI::App* verify = app.add_subcommand("verify", "structural verification suites");
  add_common(verify);
  verify->add_flag("--hochster", cfg.suite_hochster, "engine vs full-subcomplex oracle");
  verify->add_flag("--homotopy", cfg.suite_homotopy, "retraction homotopy identity");
  verify->add_flag("--diagonal", cfg.suite_diagonal, "cellular diagonal comparison");
  verify->add_flag("--axioms", cfg.suite_axioms, "DGA axioms");
  verify->add_option("--truncate", cfg.truncate, "E_m truncation degree (default 2m+2)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (betti->parsed()) cfg.command = RunConfig::Command::kBetti;
  if (ring->parsed()) cfg.command = RunConfig::Command::kRing;
  if (cellsc->parsed()) cfg.command = RunConfig::Command::kCells;
  if (verify->parsed()) {
    cfg.command = RunConfig::Command::kVerify;
    if (!cfg.suite_hochster && !cfg.suite_homotopy && !cfg.suite_diagonal && !cfg.suite_axioms) {
      std::cerr << "error: verify needs at least one of --hochster --homotopy --diagonal --axioms\n";
      return 1;
    }
  }

  try {
    return run(cfg);
  } catch (const macring::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
