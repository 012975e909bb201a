#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "helicity/spinors.hpp"

namespace helicity::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Suite { Clifford, Bilinears, Theorem, Graphene, All };
enum class OutputFormat { Json, Csv };

std::string_view to_string(Suite s);
std::string_view to_string(OutputFormat f);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);
OutputFormat parse_format(std::string_view name);

struct RunConfig {
  Suite suite = Suite::All;
  int grid_theta = 64;
  int grid_phi = 64;
  int delta_phi_samples = 8;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Number of random spinors in the bilinears suite and wavevectors in the
/// graphene suite.
inline constexpr int kBilinearSamples = 1000;
inline constexpr int kGrapheneSamples = 100;

using NamedValues = std::vector<std::pair<std::string, double>>;

struct CaseRecord {
  std::string suite;
  std::string label;
  NamedValues inputs;
  NamedValues residuals;     // defects that must stay within tolerance
  NamedValues measurements;  // reported quantities (h, counts, ratios, ...)
  std::optional<std::string> status;
  bool passed = false;

  double max_residual() const;
};

struct SuiteReport {
  std::string suite;
  RunConfig config;
  std::vector<CaseRecord> cases;

  std::size_t passed_count() const;
  double max_residual() const;
  bool all_passed() const { return passed_count() == cases.size(); }
};

class ParseError : public std::invalid_argument {
public:
  ParseError(std::string token, std::size_t position, const std::string& why);
  const std::string& token() const { return token_; }
  std::size_t position() const { return position_; }

private:
  std::string token_;
  std::size_t position_;
};

class WrongArity : public std::invalid_argument {
public:
  explicit WrongArity(std::size_t count);
  std::size_t count() const { return count_; }

private:
  std::size_t count_;
};

/// One complex literal: `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`. `offset` is
/// the token's position in the enclosing text, used in error messages.
Complex parse_complex(std::string_view token, std::size_t offset = 0);

/// Four comma-separated complex literals; whitespace is ignored.
DiracSpinor parse_spinor(std::string_view text);

SuiteReport run_suite(const RunConfig& cfg);

/// Bilinears, slash blocks and helicity for one user-supplied spinor.
SuiteReport compute_command(std::string_view spinor_text, const RunConfig& cfg);

nlohmann::ordered_json to_json(const SuiteReport& report);
std::string to_csv(const SuiteReport& report);
std::string render(const SuiteReport& report, OutputFormat format);
/// Human-readable dump of a compute report.
std::string render_compute_text(const SuiteReport& report);

}  // namespace helicity::cli
