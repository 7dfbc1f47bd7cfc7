#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigsamp/commands.hpp"

namespace {

struct Cli {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool strip_log = false;
  bool strip_log_set = false;
  std::vector<std::string> overrides;
};

int run(const std::string& name, const Cli& cli) {
  using namespace trigsamp;
  KeyValues cfg;
  if (!cli.config_path.empty()) cfg = KeyValues::parse_file(cli.config_path);
  for (const std::string& kv : cli.overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("override '" + kv + "' is not key=value");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  CommandIo io;
  io.out = &std::cout;
  io.csv_path = cli.out_path;
  if (cli.seed_set) io.seed_override = cli.seed;
  if (cli.strip_log_set) io.strip_log_override = cli.strip_log;

  if (name == "discretize-check") return cmd_discretize_check(std::move(cfg), io);
  if (name == "recover") return cmd_recover(std::move(cfg), io);
  if (name == "rate-sweep") return cmd_rate_sweep(std::move(cfg), io);
  if (name == "lebesgue-test") return cmd_lebesgue_test(std::move(cfg), io);
  if (name == "dump-index-set") return cmd_dump_index_set(std::move(cfg), io);
  throw UsageError("unknown subcommand '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse trigonometric recovery experiments"};
  app.require_subcommand(1);

  Cli cli;
  const std::vector<std::string> names = {
      "discretize-check", "recover", "rate-sweep", "lebesgue-test",
      "dump-index-set"};
  const std::vector<std::string> briefs = {
      "universal discretization sweeps over a (u, m) grid",
      "one sampling-recovery run on a seeded class member",
      "recovery-error sweep over v with a log-log rate fit",
      "greedy-vs-oracle error ratios on an exact grid",
      "print a frequency index set"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    CLI::App* sub = app.add_subcommand(names[i], briefs[i]);
    sub->add_option("--config", cli.config_path, "key=value config file");
    sub->add_option("--out", cli.out_path, "output CSV path (appends)");
    sub->add_option("--seed", cli.seed, "master seed override")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--strip-log", cli.strip_log,
                    "divide errors by the log correction before fitting");
    sub->add_option("overrides", cli.overrides,
                    "extra key=value settings applied after the config file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? trigsamp::kExitOk : trigsamp::kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  for (const auto* opt : {sub->get_option("--seed")})
    cli.seed_set = opt->count() > 0;
  cli.strip_log_set = sub->get_option("--strip-log")->count() > 0;

  try {
    return run(sub->get_name(), cli);
  } catch (const trigsamp::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return trigsamp::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return trigsamp::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return trigsamp::kExitUsage;
  }
}
