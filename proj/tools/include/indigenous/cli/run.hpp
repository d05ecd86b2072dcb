#pragma once

#include <string>
#include <vector>

#include "indigenous/cli/report.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous::cli {

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Parses the arguments (without the program name), dispatches to the
/// library and renders the report as text or, with --json, as JSON.
RunResult run(const std::vector<std::string>& args);

/// Cayley tables of + and * over S_k. Payload: "elements", "add", "mul".
Report render_tables(const SemiringCtx& ctx);
/// Aligned text form of one table ("add" or "mul").
std::string table_text(const SemiringCtx& ctx, char op);

}  // namespace indigenous::cli
