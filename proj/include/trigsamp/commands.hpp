#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "trigsamp/config.hpp"

namespace trigsamp {

// Exit codes shared by the CLI and the command entry points.
inline constexpr int kExitOk = 0;
inline constexpr int kExitExpectationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandIo {
  std::ostream* out;            // summary lines
  std::string csv_path;         // empty = no CSV
  std::optional<std::uint64_t> seed_override;
  std::optional<bool> strip_log_override;
};

int cmd_discretize_check(KeyValues cfg, const CommandIo& io);
int cmd_recover(KeyValues cfg, const CommandIo& io);
int cmd_rate_sweep(KeyValues cfg, const CommandIo& io);
int cmd_lebesgue_test(KeyValues cfg, const CommandIo& io);
int cmd_dump_index_set(KeyValues cfg, const CommandIo& io);

}  // namespace trigsamp
