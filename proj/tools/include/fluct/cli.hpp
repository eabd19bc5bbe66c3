#pragma once

// Config-driven front end: parse a JSON system description, run one task or a
// sweep over one parameter, and render a CSV or JSON table.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fluct::cli {

inline constexpr const char* version = "0.1.0";

enum class Format { csv, json };

struct RunOptions {
  std::string config_path;
  std::string output_path = "-";  ///< "-" writes to stdout
  Format format = Format::csv;
  bool strict = false;
  bool fit_slope = false;
};

struct Table {
  std::string task;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::optional<double> slope;  ///< least-squares d ln|E| / d ln x over a sweep
};

/// Raised for malformed configs; the message carries line/column for syntax errors.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// FNV-1a (64-bit) of the canonical (sorted-key, compact) JSON text, as hex.
std::string config_hash(const std::string& config_text);

/// Validity warnings for every evaluation point, collected without computing energies.
std::vector<std::string> validity_warnings(const std::string& config_text);

/// Runs the configured task. Sweep points are spread over FLUCT_THREADS workers.
Table evaluate(const std::string& config_text, bool fit_slope);

std::string render(const Table& table, const std::string& hash, Format format);

/// Exit code: 0 success, 1 error, 2 validity warning under strict.
int run(const RunOptions& options, std::ostream& err);

}  // namespace fluct::cli
