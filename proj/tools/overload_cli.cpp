// Command-line front end: overload <command> --config <path> [--out <path>] [--format csv|svg]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "overload/commands.hpp"
#include "overload/scenario.hpp"

namespace {

int fail(int code, const std::string& message) {
  std::cerr << "overload: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Awareness-mediated consumption/leisure model"};
  std::string command;
  std::string config;
  std::string out_path;
  std::string format = "csv";
  app.add_option("command", command, "solve | nash | efficient | figure1 | sweep | extended | trajectory | selftest")
      ->required()
      ->check(CLI::IsMember(overload::command_names()));
  app.add_option("--config", config, "scenario file");
  app.add_option("--out", out_path, "output file (default: standard output)");
  app.add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    for (char& ch : message) {
      if (ch == '\n') ch = ' ';
    }
    return fail(overload::kExitUsage, message);
  }

  overload::Scenario scenario;
  if (config.empty()) {
    if (command != "selftest") return fail(overload::kExitUsage, command + " requires --config <path>");
  } else {
    std::ifstream in(config, std::ios::binary);
    if (!in) return fail(overload::kExitUsage, "cannot read " + config);
    std::ostringstream text;
    text << in.rdbuf();
    try {
      scenario = overload::parse_scenario(text.str());
    } catch (const std::exception& e) {
      return fail(overload::kExitUsage, config + ": " + e.what());
    }
  }

  const auto result = overload::run_command(
      command, scenario, format == "svg" ? overload::OutputFormat::svg : overload::OutputFormat::csv);
  if (result.exit_code != overload::kExitOk && result.exit_code != overload::kExitSelftest)
    return fail(result.exit_code, result.diagnostic);

  if (out_path.empty()) {
    std::cout << result.output;
    std::cout.flush();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << result.output)) return fail(overload::kExitUsage, "cannot write " + out_path);
  }
  if (result.exit_code == overload::kExitSelftest) return fail(result.exit_code, result.diagnostic);
  return overload::kExitOk;
}
