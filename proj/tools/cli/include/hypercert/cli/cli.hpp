#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypercert/numeric.hpp"

namespace hypercert::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kContractError = 1,  ///< bad input, usage error, or a failed check
  kMismatch = 2,       ///< ran fine but a table cell differs from its reference
};

enum class OutputFormat { csv, markdown, json };

/// Effective settings for one invocation: flags, then the config file for
/// anything the flags left unset.
struct RunConfig {
  std::optional<Index> n_max;
  std::optional<unsigned> j_max;
  std::optional<unsigned> k_max;
  std::string anchor;  ///< empty = per-command default; "all" only for table1
  std::string strict;  ///< empty = per-family default
  std::string sequence = "partition";
  std::string cache_dir;
  unsigned threads = 0;
  std::optional<OutputFormat> format;
  std::uint64_t seed = 20240917;

  std::string summary() const;
};

/// Runs one command line, without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercert::cli
