#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vocab_lint {

/// Maintenance facts about one source vocabulary, as of a snapshot date.
struct OntologyMetadata {
  std::string name;
  std::optional<std::chrono::year_month_day> last_release;
  int releases_last_24_months = 0;
  std::optional<double> median_issue_response_days;
  bool accepts_term_requests = false;
  double definition_coverage = 0.0;
  long terms_reused_elsewhere = 0;
  long total_terms = 1;
  bool has_permanent_iris = false;
  std::chrono::year_month_day as_of{};
};

struct MetadataIssue {
  int line = 0;  ///< first line of the record
  std::string message;
};

struct MetadataLoad {
  std::vector<OntologyMetadata> records;
  std::vector<MetadataIssue> errors;  ///< rejected records
  std::vector<MetadataIssue> notes;   ///< ignored keys
};

/// Parses the snapshot format: blank-line separated records of "key: value"
/// lines, dates as YYYY-MM-DD. A record missing name or as_of, or holding an
/// unparsable value, is rejected without affecting the others.
MetadataLoad load_metadata(std::string_view input);

/// Source of metadata records. The snapshot file is the only provider shipped;
/// anything that talks to a hosting service implements this interface.
class MetadataProvider {
 public:
  virtual ~MetadataProvider() = default;
  virtual MetadataLoad fetch() = 0;
};

class SnapshotProvider : public MetadataProvider {
 public:
  explicit SnapshotProvider(std::string text) : text_(std::move(text)) {}
  MetadataLoad fetch() override { return load_metadata(text_); }

 private:
  std::string text_;
};

inline constexpr const char* kHealthDimensions[] = {"activity", "responsiveness", "documentation",
                                                    "reuse", "identifiers"};

struct HealthConfig {
  /// Weight per dimension; must be non-negative and sum to 1 within 1e-9.
  std::map<std::string, double> weights = {{"activity", 0.2},
                                           {"responsiveness", 0.2},
                                           {"documentation", 0.2},
                                           {"reuse", 0.2},
                                           {"identifiers", 0.2}};
  int active_months = 12;
  int recent_months = 24;
  double fast_response_days = 30.0;
  double slow_response_days = 180.0;
  double reuse_scale = 10.0;
  double healthy_cut = 0.75;
  double caution_cut = 0.4;

  /// Throws VocabError(invalid_weights).
  void validate() const;
};

enum class Verdict { healthy, caution, stale };

std::string_view to_string(Verdict verdict);

struct HealthReport {
  std::string name;
  std::map<std::string, double> subscores;
  double composite = 0.0;
  Verdict verdict = Verdict::stale;
  std::vector<std::string> notes;
};

/// True when `later` is no more than `months` calendar months after `earlier`.
bool within_months(std::chrono::year_month_day earlier, std::chrono::year_month_day later,
                   int months);

HealthReport assess_health(const OntologyMetadata& meta, const HealthConfig& config = {});

}  // namespace vocab_lint
