#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobsplit::cli {

inline constexpr const char* kSchema = "frobsplit.run/1";

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitDomain = 4;

// Runs one command.  `args` excludes the program name.  The report goes to
// `out` (or to --output), usage errors and help to `err` / `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Flattens a JSON document into "path,value" CSV rows, the --format csv
// payload.  Paths join object keys and array indices with '.'.
std::string to_csv(const std::string& json_text);

}  // namespace frobsplit::cli
