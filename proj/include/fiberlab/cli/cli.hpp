#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fiberlab/grothendieck/theorems.hpp"

namespace fiberlab::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { Json, Csv, Markdown };

struct RunConfig {
  std::string command;
  std::string input;
  uint64_t seed = 0;
  std::optional<std::vector<Scalar>> samples;
  Format format = Format::Json;
  std::optional<size_t> k_min;
  std::optional<size_t> k_max;
  bool corpus = false;
  std::string corpus_dir;
  size_t ch_samples = 100;
};

struct Report {
  std::string input;
  std::string input_digest;
  std::string command;
  std::vector<CheckRecord> checks;
};

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUnsupported = 3;

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Names of checks whose failure is the expected outcome, from an optional
/// expectations.json next to the input.
std::set<std::string> expected_negatives(const std::string& input_path);

/// One command on one input. Throws fiberlab::Error.
Report run_command(const RunConfig& config, const std::string& command, const std::string& input);

std::string render(const std::vector<Report>& reports, Format format);

/// Corpus files in name order.
std::vector<std::string> corpus_files(const std::string& dir);

/// Parses arguments, runs, writes the rendering to out and diagnostics to err.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fiberlab::cli
