#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vocab_lint/health_assessor.hpp"
#include "vocab_lint/ingest.hpp"
#include "vocab_lint/lexical_rules.hpp"
#include "vocab_lint/term_model.hpp"

namespace vocab_lint {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct Suppression {
  std::string rule;     ///< rule id or glob pattern
  std::string subject;  ///< IRI or label; labels compare normalized

  /// Parses "RULE:subject". Throws VocabError(invalid_config).
  static Suppression parse(std::string_view text);
};

struct RuleConfig {
  std::vector<std::string> enabled_rules = {"*"};
  std::map<std::string, Severity> severity_overrides;
  std::vector<Suppression> suppressions;
  Severity fail_threshold = Severity::warning;
  std::map<std::string, std::filesystem::path> lexicon_paths;
  std::optional<std::filesystem::path> prefix_map_path;
  std::vector<std::filesystem::path> reference_paths;
  std::optional<std::filesystem::path> metadata_path;
  ComplexityConfig complexity;
  HealthConfig health;
  ColumnMap columns = ColumnMap::defaults();
  bool isolate_files = false;

  /// Reads a JSON config document. Relative paths resolve against the
  /// directory holding the file. Throws VocabError(invalid_config) or
  /// VocabError(unreadable_input).
  static RuleConfig load(const std::filesystem::path& path);
  /// Same, from already-read text.
  static RuleConfig from_json(std::string_view text, const std::filesystem::path& base_dir);

  /// Throws VocabError(invalid_config) on unknown rule ids in overrides and
  /// bad thresholds.
  void validate() const;
};

enum class InputFormat { obo, tsv };

std::string_view to_string(InputFormat format);
/// Throws VocabError(unknown_format).
InputFormat parse_format(std::string_view text);
/// From the file extension (.obo, .tsv, .tab). Throws VocabError(unknown_format).
InputFormat infer_format(const std::filesystem::path& path);

struct InputSpec {
  std::filesystem::path path;
  std::optional<InputFormat> format;  ///< inferred when absent
};

struct InputSummary {
  std::string file;
  InputFormat format = InputFormat::obo;
  std::size_t term_count = 0;
};

struct Report {
  std::vector<Finding> findings;
  std::map<Severity, std::size_t> counts;
  std::vector<InputSummary> inputs;
  std::string tool_version{kToolVersion};
};

/// Parses every input, runs all enabled checks over the merged vocabulary
/// (or per file with isolate_files) and returns the sorted report.
Report run_lint(const RuleConfig& config, std::vector<InputSpec> inputs);

/// The deterministic order of a report: file, line, rule id, subject label,
/// then the remaining fields.
bool finding_less(const Finding& a, const Finding& b);

enum class OutputFormat { text, json };

/// Throws VocabError(invalid_config).
OutputFormat parse_output_format(std::string_view text);

std::string render_report(const Report& report, OutputFormat format, bool color = false);

int exit_code(const Report& report, const RuleConfig& config);

/// Ranked reuse candidates for each query against config.reference_paths.
/// Throws VocabError(no_references) when none are configured.
std::string suggest_mode(const RuleConfig& config, const std::vector<std::string>& queries,
                         OutputFormat format, std::size_t top_k = 5);

/// Health reports for every accepted record, followed by record errors.
std::string render_health(const MetadataLoad& load, const HealthConfig& config,
                          OutputFormat format);

struct RuleInfo {
  std::string_view id;
  Severity default_severity;
  std::string_view guideline;  ///< naming guideline or challenge the rule checks
  std::string_view summary;
};

const std::vector<RuleInfo>& rule_catalog();
bool is_known_rule(std::string_view id);
/// Shell-style match supporting "*" and "?".
bool glob_match(std::string_view pattern, std::string_view text);

std::string render_catalog(OutputFormat format);

}  // namespace vocab_lint
