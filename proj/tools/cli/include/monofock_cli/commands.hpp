#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "monofock_cli/config.hpp"
#include "monofock_cli/document.hpp"

namespace monofock::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_unsupported = 3;

inline constexpr int max_enumerate_n = 8;
inline constexpr int max_arcsine_order = 12;
inline constexpr std::int64_t default_mc_samples = 200000;

Document cmd_moment(const RunConfig& config);
Document cmd_converge(const RunConfig& config);
Document cmd_arcsine(const RunConfig& config);
Document cmd_enumerate(const RunConfig& config);
Document cmd_invariance(const RunConfig& config);

// Dispatches on config.command and renders in config.format.
Document execute(const RunConfig& config);
std::string render(const Document& doc, Format format);

// Full command line handling: argv[0] is skipped. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monofock::cli
