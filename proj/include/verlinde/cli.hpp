#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "verlinde/so3.hpp"

namespace verlinde::cli {

enum class Format { Text, Json, Csv };

struct JobConfig {
  std::string command;  // fusion-table, verlinde-dim, characters, regular-points, so3-table, so3-fusion, koszul, verify
  std::string group;    // "A2"
  std::optional<std::int64_t> level;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> k;
  std::optional<so3::TwistingType> twisting;
  std::string beta;  // koszul: rows separated by ';', entries by ','
  std::optional<int> truncation;
  Format format = Format::Text;
  std::filesystem::path cache_dir;
  bool verify = false;
};

enum ExitCode { kOk = 0, kRefused = 1, kInvalid = 2 };

/// Runs one job. Output goes to `out`; warnings and errors to `err`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a JobConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace verlinde::cli
