// Command-line front end.
#pragma once

#include "revform/decide.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace revform::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kUnknown = 3 };

struct CorpusEntry {
    std::string formula;
    std::optional<Status> expected_status;
    std::vector<std::string> tags;
};

/// Throws std::invalid_argument with the 1-based line number on malformed lines.
/// Blank lines are skipped.
std::vector<CorpusEntry> read_corpus(std::istream& in);

std::optional<Status> status_from_string(const std::string& s);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace revform::cli
