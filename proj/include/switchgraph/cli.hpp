#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace switchgraph::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // unreachable, infeasible, failed check
inline constexpr int kUnknown = 2;   // undecided or degenerate
inline constexpr int kUsage = 3;
inline constexpr int kIo = 4;

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Margins file: "p q", then the p row sums, then the q column sums, whitespace separated.
void read_margins_file(const std::string& path, std::vector<int>& row_sums,
                       std::vector<int>& col_sums);

}  // namespace switchgraph::cli
