// hfw: command-line front end over the hyperfield library.
//
//   hfw <command> [spec.json] [--json] [--height N] [--window B] [--order N]
//
// Exit codes: 0 ok, 1 check failure, 2 bad spec, 3 equivalence breakage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hfw/reports.hpp"

int main(int argc, char** argv) {
  using hfw::cli::kSpecError;

  CLI::App app{"Finite and symbolic hyperfield toolkit"};
  std::string command;
  std::string spec_path;
  bool as_json = false;
  hfw::cli::Options opts;

  app.add_option("command", command,
                 "check | factor | orderings | valuations | compat | baer-krull | enumerate")
      ->required()
      ->check(CLI::IsMember(
          {"check", "factor", "orderings", "valuations", "compat", "baer-krull", "enumerate"}));
  app.add_option("spec", spec_path, "structure spec (JSON)");
  app.add_flag("--json", as_json, "emit JSON");
  app.add_option("--height", opts.height, "height bound for searches over Q")->capture_default_str();
  app.add_option("--window", opts.window, "window bound for symbolic checks")->capture_default_str();
  app.add_option("--order", opts.order, "largest order for enumerate")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kSpecError;
  }

  if (const char* seed = std::getenv("HFW_SEED")) {
    try {
      opts.seed = std::stoull(seed);
    } catch (const std::exception&) {
      std::cerr << "HFW_SEED must be a non-negative integer\n";
      return kSpecError;
    }
  }

  std::optional<nlohmann::json> spec;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) {
      std::cerr << "cannot open " << spec_path << "\n";
      return kSpecError;
    }
    try {
      spec = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << spec_path << ": " << e.what() << "\n";
      return kSpecError;
    }
  }

  const hfw::cli::CommandResult r = hfw::cli::run(command, spec, opts);
  if (as_json) {
    std::cout << r.report.dump(2) << "\n";
  } else {
    std::cout << hfw::cli::to_text(r.report);
  }
  if (r.exit_code != 0 && r.report.contains("message")) {
    std::cerr << "hfw: " << r.report["message"].get<std::string>() << "\n";
  }
  return r.exit_code;
}
