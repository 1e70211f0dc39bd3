#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "hfw/spec_io.hpp"

namespace hfw::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kSpecError = 2, kEquivalenceError = 3 };

struct Options {
  unsigned height = 100;
  int window = 6;
  std::size_t order = 3;
  std::optional<std::uint64_t> seed;  // HFW_SEED; nothing samples randomly yet
};

/// A report and the exit code it implies. Reports contain no timing so that
/// equal inputs give byte-identical JSON.
struct CommandResult {
  nlohmann::json report;
  int exit_code = kOk;
};

/// FNV-1a over the compact dump of the command, spec and options.
std::string digest(const nlohmann::json& inputs);

CommandResult cmd_check(const io::LoadedStructure& s, const Options& o);
CommandResult cmd_factor(const io::LoadedStructure& s, const Options& o);
CommandResult cmd_orderings(const io::LoadedStructure& s, const Options& o);
CommandResult cmd_valuations(const io::LoadedStructure& s, const Options& o);
CommandResult cmd_compat(const io::LoadedStructure& s, const Options& o);
CommandResult cmd_baer_krull(const io::LoadedStructure& s, const Options& o);
CommandResult cmd_enumerate(const Options& o);

/// Runs `command` on the spec (ignored by "enumerate"), converting SpecError
/// and EquivalenceError into exit codes 2 and 3 with a diagnostic report.
CommandResult run(const std::string& command, const std::optional<nlohmann::json>& spec,
                  const Options& o);

/// Aligned plain-text rendering of a report.
std::string to_text(const nlohmann::json& report);

}  // namespace hfw::cli
