#include "cayley/report.hpp"
#include "cayley/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the split Cayley algebra kernel"};

  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::optional<std::string> points;
  std::optional<std::string> out_path;

  app.add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember(cayley::suite_names()))
      ->capture_default_str();
  app.add_option("--trials", trials, "Randomized trials per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "PRNG seed")->capture_default_str();
  app.add_option("--points", points, "Point-list file replaying the sphere suites");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    const cayley::VerificationReport report = cayley::run_suite(suite, trials, seed, points);
    const std::string serialized = cayley::emit_report(report, format);
    if (out_path) {
      std::ofstream out(*out_path);
      if (!out) {
        std::cerr << "cannot write '" << *out_path << "'\n";
        return 2;
      }
      out << serialized;
    } else {
      std::cout << serialized;
    }
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
