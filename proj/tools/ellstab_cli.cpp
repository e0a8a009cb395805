// Command-line front end: one subcommand per registry entry, JSON in (file or
// stdin), JSON out on stdout. Exit 0 on success, 1 on domain errors or failed
// verification, 2 on malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ellstab/cli_core.hpp"

namespace {

int emit(const ellstab::RunOutcome& out) {
  std::cout << out.doc.dump(2) << "\n";
  return out.status;
}

int fail_input(const std::string& msg) {
  ellstab::RunOutcome out{
      ellstab::json{{"ok", false}, {"error", msg}, {"paper_ref", "command-registry"}}, 2};
  return emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for elliptic endoscopy of metaplectic-type groups"};
  app.require_subcommand(1);

  std::string input_path;
  long long seed = -1;
  long long nmax = -1;
  std::string suite;

  for (const auto& info : ellstab::command_registry()) {
    CLI::App* sub = app.add_subcommand(info.name, "paper_ref: " + info.anchor);
    sub->add_option("--input", input_path, "JSON arguments from a file, or - for stdin");
    sub->add_option("--seed", seed, "seed for randomized verification sweeps");
    sub->add_option("--nmax", nmax, "rank bound for sweeps");
    sub->add_option("--suite", suite, "verification suite (all, rootsys, endoscopy, motive, localsym)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();

  ellstab::json args = ellstab::json::object();
  if (!input_path.empty()) {
    std::string text;
    if (input_path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(input_path);
      if (!in) return fail_input("cannot open input file \"" + input_path + "\"");
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    try {
      args = ellstab::json::parse(text);
    } catch (const ellstab::json::parse_error& e) {
      return fail_input(std::string("invalid JSON: ") + e.what());
    }
    if (!args.is_object()) return fail_input("arguments must be a JSON object");
  }
  if (seed >= 0) args["seed"] = seed;
  if (nmax >= 0) args["nmax"] = nmax;
  if (!suite.empty()) args["suite"] = suite;

  return emit(ellstab::run(command, args));
}
