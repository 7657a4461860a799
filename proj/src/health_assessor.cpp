#include "vocab_lint/health_assessor.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "vocab_lint/term_model.hpp"
#include "vocab_lint/text.hpp"

namespace vocab_lint {
namespace {

using std::chrono::year_month_day;

// Composite scores are sums of products; a cut is reached when the composite
// is within this distance below it.
constexpr double kCutTolerance = 1e-9;

std::optional<year_month_day> parse_date(std::string_view text) {
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto parse = [](std::string_view s, auto& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
  };
  if (!parse(text.substr(0, 4), y) || !parse(text.substr(5, 2), m) ||
      !parse(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  year_month_day date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::optional<bool> parse_bool(std::string_view text) {
  auto v = ascii_lower(text);
  if (v == "true" || v == "yes") return true;
  if (v == "false" || v == "no") return false;
  return std::nullopt;
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || p != text.data() + text.size()) return std::nullopt;
  return value;
}

struct RecordBuilder {
  OntologyMetadata meta;
  int line = 0;
  bool has_name = false;
  bool has_as_of = false;
  std::vector<std::string> problems;

  void set(const std::string& key, std::string_view value, int at, MetadataLoad& load) {
    auto bad = [&](const char* what) {
      problems.push_back("line " + std::to_string(at) + ": " + key + " " + what);
    };
    if (key == "name") {
      meta.name = std::string(value);
      has_name = !value.empty();
    } else if (key == "as_of") {
      if (auto d = parse_date(value)) {
        meta.as_of = *d;
        has_as_of = true;
      } else {
        bad("is not a YYYY-MM-DD date");
      }
    } else if (key == "last_release") {
      if (value.empty()) return;
      if (auto d = parse_date(value)) meta.last_release = *d;
      else bad("is not a YYYY-MM-DD date");
    } else if (key == "releases_last_24_months") {
      auto n = parse_number<int>(value);
      if (n && *n >= 0) meta.releases_last_24_months = *n;
      else bad("must be a non-negative integer");
    } else if (key == "median_issue_response_days") {
      if (value.empty()) return;
      auto n = parse_number<double>(value);
      if (n && *n >= 0) meta.median_issue_response_days = *n;
      else bad("must be a non-negative number");
    } else if (key == "accepts_term_requests") {
      if (auto b = parse_bool(value)) meta.accepts_term_requests = *b;
      else bad("must be true or false");
    } else if (key == "definition_coverage") {
      auto n = parse_number<double>(value);
      if (n && *n >= 0.0 && *n <= 1.0) meta.definition_coverage = *n;
      else bad("must be a number in [0, 1]");
    } else if (key == "terms_reused_elsewhere") {
      auto n = parse_number<long>(value);
      if (n && *n >= 0) meta.terms_reused_elsewhere = *n;
      else bad("must be a non-negative integer");
    } else if (key == "total_terms") {
      auto n = parse_number<long>(value);
      if (n && *n > 0) meta.total_terms = *n;
      else bad("must be a positive integer");
    } else if (key == "has_permanent_iris") {
      if (auto b = parse_bool(value)) meta.has_permanent_iris = *b;
      else bad("must be true or false");
    } else {
      load.notes.push_back({at, "unknown key '" + key + "' ignored"});
    }
  }

  void finish(MetadataLoad& load) {
    if (!has_name) problems.insert(problems.begin(), "missing name");
    if (!has_as_of) problems.insert(problems.begin() + (has_name ? 0 : 1), "missing as_of");
    if (has_as_of && meta.last_release &&
        std::chrono::sys_days(*meta.last_release) > std::chrono::sys_days(meta.as_of)) {
      problems.push_back("last_release is after as_of");
    }
    if (problems.empty()) {
      load.records.push_back(std::move(meta));
    } else {
      load.errors.push_back({line, join(problems, "; ")});
    }
  }
};

}  // namespace

MetadataLoad load_metadata(std::string_view input) {
  if (input.substr(0, 3) == "\xEF\xBB\xBF") input.remove_prefix(3);
  MetadataLoad load;
  std::optional<RecordBuilder> current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < input.size()) {
    auto end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    auto line = trim(input.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) {
      if (current) current->finish(load);
      current.reset();
      continue;
    }
    if (line.front() == '#') continue;
    if (!current) {
      current.emplace();
      current->line = line_no;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      current->problems.push_back("line " + std::to_string(line_no) + ": expected 'key: value'");
      continue;
    }
    current->set(ascii_lower(trim(line.substr(0, colon))), trim(line.substr(colon + 1)), line_no,
                 load);
  }
  if (current) current->finish(load);
  return load;
}

void HealthConfig::validate() const {
  double sum = 0.0;
  for (const char* dim : kHealthDimensions) {
    auto it = weights.find(dim);
    if (it == weights.end()) {
      throw VocabError(ErrorKind::invalid_weights, std::string("missing weight for ") + dim);
    }
    if (!(it->second >= 0.0) || !std::isfinite(it->second)) {
      throw VocabError(ErrorKind::invalid_weights, std::string("weight for ") + dim +
                                                       " must be a non-negative number");
    }
    sum += it->second;
  }
  for (const auto& [name, w] : weights) {
    if (std::find_if(std::begin(kHealthDimensions), std::end(kHealthDimensions),
                     [&](const char* d) { return name == d; }) == std::end(kHealthDimensions)) {
      throw VocabError(ErrorKind::invalid_weights, "unknown health dimension '" + name + "'");
    }
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw VocabError(ErrorKind::invalid_weights,
                     "health weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::healthy: return "healthy";
    case Verdict::caution: return "caution";
    case Verdict::stale: return "stale";
  }
  return "stale";
}

bool within_months(year_month_day earlier, year_month_day later, int months) {
  year_month_day limit = earlier + std::chrono::months{months};
  if (!limit.ok()) limit = limit.year() / limit.month() / std::chrono::last;
  return std::chrono::sys_days(later) <= std::chrono::sys_days(limit);
}

HealthReport assess_health(const OntologyMetadata& meta, const HealthConfig& config) {
  config.validate();
  HealthReport report;
  report.name = meta.name;

  double activity = 0.0;
  if (meta.last_release) {
    if (within_months(*meta.last_release, meta.as_of, config.active_months)) {
      activity = 1.0;
    } else if (within_months(*meta.last_release, meta.as_of, config.recent_months)) {
      activity = 0.5;
    }
  } else {
    report.notes.push_back("no release date recorded");
  }

  double responsiveness = 0.0;
  if (meta.accepts_term_requests) {
    if (!meta.median_issue_response_days) {
      responsiveness = 0.5;
      report.notes.push_back("issue response time unknown");
    } else if (*meta.median_issue_response_days <= config.fast_response_days) {
      responsiveness = 1.0;
    } else if (*meta.median_issue_response_days <= config.slow_response_days) {
      responsiveness = 0.5;
    }
  }

  double reuse = std::min(1.0, static_cast<double>(meta.terms_reused_elsewhere) /
                                   static_cast<double>(std::max(1L, meta.total_terms)) *
                                   config.reuse_scale);

  report.subscores = {{"activity", activity},
                      {"responsiveness", responsiveness},
                      {"documentation", meta.definition_coverage},
                      {"reuse", reuse},
                      {"identifiers", meta.has_permanent_iris ? 1.0 : 0.0}};
  for (const char* dim : kHealthDimensions) {
    report.composite += config.weights.at(dim) * report.subscores.at(dim);
  }

  if (report.composite >= config.healthy_cut - kCutTolerance) {
    report.verdict = Verdict::healthy;
  } else if (report.composite >= config.caution_cut - kCutTolerance) {
    report.verdict = Verdict::caution;
  } else {
    report.verdict = Verdict::stale;
    report.notes.push_back(
        "low maintenance activity alone does not mean the vocabulary is of poor quality; "
        "review its terms before ruling it out");
  }
  return report;
}

}  // namespace vocab_lint
