#include "vocab_lint/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <ranges>
#include <tuple>

#include "json.hpp"

#include "vocab_lint/definition_rules.hpp"
#include "vocab_lint/identity_rules.hpp"
#include "vocab_lint/reuse_index.hpp"
#include "vocab_lint/text.hpp"

namespace vocab_lint {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

const std::vector<RuleInfo> kCatalog = {
    {"R01-SUGGEST", Severity::info, "Rule 1 (reuse)",
     "suggest mode: existing reference terms that match a proposed label"},
    {"R02-NEGATIVE", Severity::warning, "Rule 2 (simple, positive labels)",
     "label defined by absence or exclusion; info for non- prefixes outside the allowlist"},
    {"R02-CONJUNCTION", Severity::warning, "Rule 2 (simple, positive labels)",
     "label joins alternatives or several concepts with and/or"},
    {"R02-PLURAL", Severity::info, "Rule 2 (simple, positive labels)",
     "final word looks plural"},
    {"R03-COLLOQUIAL", Severity::warning, "Rule 3 (technical wording)",
     "lay word used where a technical term exists; info when only a synonym"},
    {"R04-NARROW", Severity::info, "Rule 4 (universal terms)",
     "label only prepends modifiers to another term it does not declare as parent"},
    {"R05-ABBREV", Severity::warning, "Rule 5 (abbreviations)",
     "acronym or abbreviation in a label"},
    {"R05-EXPANSION-STYLE", Severity::info, "Rule 5 (abbreviations)",
     "label carries its abbreviation in parentheses; move it to a synonym"},
    {"R06-MISSING-IRI", Severity::warning, "Rule 6 (identifiers)", "term has no IRI"},
    {"R06-BAD-IRI", Severity::error, "Rule 6 (identifiers)",
     "identifier is neither absolute nor an expandable CURIE"},
    {"R06-NONPURL", Severity::info, "Rule 6 (identifiers)",
     "OBO namespace IRI not in persistent URL form"},
    {"R06-DUP-IRI", Severity::error, "Rule 6 (identifiers)", "one IRI borne by several terms"},
    {"R07-MISSING-DEF", Severity::warning, "Rule 7 (definitions)", "live term has no definition"},
    {"R07-MISSING-SOURCE", Severity::info, "Rule 7 (definitions)",
     "definition cites no source"},
    {"R07-FORM", Severity::info, "Rule 7 (definitions)",
     "definition is not in genus-differentia form"},
    {"R07-GENUS-MISMATCH", Severity::info, "Rule 7 (definitions)",
     "definition genus names none of the declared parents"},
    {"R07-DUPLICATE-DEF", Severity::warning, "Rule 7 (definitions)",
     "several live terms share one definition"},
    {"R07-SELF-REF", Severity::warning, "Rule 7 (definitions)",
     "definition mentions the term's own label"},
    {"R07-CIRCULAR", Severity::warning, "Rule 7 (definitions)",
     "definitions mention each other in a cycle"},
    {"R08-LABEL", Severity::warning, "Rule 8 (deprecation)",
     "obsolete label does not start with \"obsolete\""},
    {"R08-NO-REPLACEMENT", Severity::info, "Rule 8 (deprecation)",
     "obsolete term names no replacement"},
    {"R08-DANGLING", Severity::error, "Rule 8 (deprecation)",
     "replacement IRI is not in the vocabulary"},
    {"R08-CHAIN", Severity::info, "Rule 8 (deprecation)",
     "replacement is itself obsolete; points at the chain terminus"},
    {"R08-LIVE-REPLACED", Severity::warning, "Rule 8 (deprecation)",
     "live term declares a replacement"},
    {"R08-OBSOLETE-PARENT", Severity::warning, "Rule 8 (deprecation)",
     "live term has an obsolete parent"},
    {"R08-CYCLE", Severity::error, "Rule 8 (deprecation)", "replacement chain loops"},
    {"R09-BOOLEAN", Severity::warning, "Rule 9 (tags)",
     "tag value is a bare boolean; name what is true instead"},
    {"R09-NEGATIVE-TAG", Severity::info, "Rule 9 (tags)", "tag value records an absence"},
    {"C-SEMANTIC-NOISE", Severity::warning, "semantic noise",
     "one label names several terms with different IRIs"},
    {"C-SYNONYM-CLASH", Severity::info, "semantic noise",
     "a synonym of one term is the label or synonym of another"},
    {"C-WORD-BOMB", Severity::info, "word bombs",
     "combinatorial modifier families sharing one head noun"},
    {"C-CONCEPT-BOMB", Severity::warning, "concept bombs",
     "one label packs several independent concepts"},
    {"C-TIMELINE", Severity::warning, "timeline terms",
     "label anchored to a relative point in time"},
    {"PARSE", Severity::error, "input", "parse diagnostic from the input reader"},
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw VocabError(ErrorKind::unreadable_input, "cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw VocabError(ErrorKind::unreadable_input, "error reading " + path.string());
  return buf.str();
}

[[noreturn]] void config_error(const std::string& message) {
  throw VocabError(ErrorKind::invalid_config, "config: " + message);
}

fs::path resolve_path(const json& value, const fs::path& base_dir, const std::string& key) {
  if (!value.is_string()) config_error(key + " must be a string path");
  fs::path p = value.get<std::string>();
  return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
}

Severity severity_value(const json& value, const std::string& key) {
  if (value.is_string()) {
    if (auto s = parse_severity(value.get<std::string>())) return *s;
  }
  config_error(key + " must be one of error, warning, info");
}

int int_value(const json& value, const std::string& key) {
  if (!value.is_number_integer()) config_error(key + " must be an integer");
  return value.get<int>();
}

ParseResult parse_input(const fs::path& path, InputFormat format, const ColumnMap& columns) {
  auto text = read_file(path);
  if (format == InputFormat::obo) return parse_obo(text, path.string());
  return parse_term_table(text, path.string(), columns);
}

Finding parse_finding(const ParseDiagnostic& d) {
  Finding f;
  f.rule_id = "PARSE";
  f.severity = d.severity == DiagnosticSeverity::error ? Severity::error : Severity::warning;
  f.message = d.message;
  f.location = d.location;
  return f;
}

Lexicons load_lexicons(const RuleConfig& config) {
  Lexicons lex = Lexicons::defaults();
  for (const auto& [name, path] : config.lexicon_paths) lex.extend(name, read_file(path));
  lex.validate();
  return lex;
}

PrefixMap base_prefixes(const RuleConfig& config) {
  PrefixMap prefixes = PrefixMap::obo_defaults();
  if (config.prefix_map_path) prefixes.merge(load_prefix_map(read_file(*config.prefix_map_path)));
  return prefixes;
}

void append(std::vector<Finding>& out, std::vector<Finding> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

// Runs every check over one analysis vocabulary.
std::vector<Finding> analyze(const Vocabulary& vocab, const Lexicons& lex,
                             const ComplexityConfig& complexity) {
  std::vector<Finding> out;
  for (const auto& term : vocab.terms()) {
    std::vector<Finding> content = run_label_checks(term, lex, complexity);
    std::vector<std::string> tags;
    auto range = term.annotations.equal_range("tag");
    for (auto it = range.first; it != range.second; ++it) tags.push_back(it->second);
    for (auto& f : check_tag_style(tags, lex)) {
      if (term.iri) f.subject_iris.push_back(*term.iri);
      f.location = term.location;
      content.push_back(std::move(f));
    }
    append(content, check_definition_present(term));
    append(content, check_genus_differentia(term, vocab));
    // Deprecated content is frozen history: still reported, never blocking.
    if (term.obsolete) {
      for (auto& f : content) f.severity = Severity::info;
    }
    append(out, std::move(content));
    append(out, check_iri(term, vocab.prefix_map()));
  }
  append(out, check_iri_uniqueness(vocab));
  append(out, check_label_collisions(vocab));
  append(out, check_synonym_collisions(vocab));
  append(out, check_deprecation(vocab));
  append(out, detect_word_bombs(vocab, complexity));
  append(out, check_redundant_narrowing(vocab));
  append(out, check_definition_uniqueness(vocab));
  append(out, detect_circular_definitions(vocab));
  return out;
}

bool enabled(const RuleConfig& config, const std::string& rule_id) {
  if (rule_id == "PARSE") return true;
  return std::any_of(config.enabled_rules.begin(), config.enabled_rules.end(),
                     [&](const std::string& p) { return glob_match(p, rule_id); });
}

bool suppressed(const RuleConfig& config, const Finding& f, const PrefixMap& prefixes) {
  for (const auto& s : config.suppressions) {
    if (!glob_match(s.rule, f.rule_id)) continue;
    if (normalize_label(f.subject_label) == normalize_label(s.subject)) return true;
    for (const auto& iri : f.subject_iris) {
      if (iri.value() == s.subject) return true;
      if (auto parsed = Iri::parse(s.subject); parsed && prefixes.expand(iri) == prefixes.expand(*parsed)) {
        return true;
      }
    }
  }
  return false;
}

std::string location_file(const Finding& f) { return f.location ? f.location->file : ""; }
int location_line(const Finding& f) { return f.location ? f.location->line : 0; }

std::string iri_list(const Finding& f) {
  std::vector<std::string> v;
  for (const auto& i : f.subject_iris) v.push_back(i.value());
  return join(v, " ");
}

std::string_view color_of(Severity s) {
  switch (s) {
    case Severity::error: return "\x1b[31m";
    case Severity::warning: return "\x1b[33m";
    case Severity::info: return "\x1b[36m";
  }
  return "";
}

std::string format_score(double score) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", score);
  return buf;
}

}  // namespace

Suppression Suppression::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || trim(text.substr(colon + 1)).empty()) {
    config_error("suppression \"" + std::string(text) + "\" must read RULE:subject");
  }
  return {std::string(trim(text.substr(0, colon))), std::string(trim(text.substr(colon + 1)))};
}

RuleConfig RuleConfig::load(const fs::path& path) {
  return from_json(read_file(path), path.parent_path());
}

RuleConfig RuleConfig::from_json(std::string_view text, const fs::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    config_error(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) config_error("top level must be an object");
  RuleConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "enabled_rules") {
      if (!value.is_array()) config_error("enabled_rules must be an array");
      cfg.enabled_rules.clear();
      for (const auto& p : value) {
        if (!p.is_string()) config_error("enabled_rules entries must be strings");
        cfg.enabled_rules.push_back(p.get<std::string>());
      }
    } else if (key == "severity_overrides") {
      if (!value.is_object()) config_error("severity_overrides must be an object");
      for (const auto& [id, sev] : value.items()) {
        cfg.severity_overrides[id] = severity_value(sev, "severity_overrides." + id);
      }
    } else if (key == "suppressions") {
      if (!value.is_array()) config_error("suppressions must be an array");
      for (const auto& s : value) {
        if (s.is_string()) {
          cfg.suppressions.push_back(Suppression::parse(s.get<std::string>()));
        } else if (s.is_object() && s.contains("rule") && s.contains("subject") &&
                   s["rule"].is_string() && s["subject"].is_string()) {
          cfg.suppressions.push_back({s["rule"].get<std::string>(), s["subject"].get<std::string>()});
        } else {
          config_error("suppressions entries must be \"RULE:subject\" or {rule, subject}");
        }
      }
    } else if (key == "fail_threshold") {
      cfg.fail_threshold = severity_value(value, key);
    } else if (key == "lexicon_paths") {
      if (!value.is_object()) config_error("lexicon_paths must be an object");
      for (const auto& [name, p] : value.items()) {
        cfg.lexicon_paths[name] = resolve_path(p, base_dir, "lexicon_paths." + name);
      }
    } else if (key == "prefix_map_path") {
      cfg.prefix_map_path = resolve_path(value, base_dir, key);
    } else if (key == "reference_paths") {
      if (!value.is_array()) config_error("reference_paths must be an array");
      for (const auto& p : value) cfg.reference_paths.push_back(resolve_path(p, base_dir, key));
    } else if (key == "metadata_path") {
      cfg.metadata_path = resolve_path(value, base_dir, key);
    } else if (key == "complexity") {
      if (!value.is_object()) config_error("complexity must be an object");
      for (const auto& [k, v] : value.items()) {
        if (k == "concept_bomb_token_threshold") {
          cfg.complexity.concept_bomb_token_threshold = int_value(v, "complexity." + k);
        } else if (k == "word_bomb_min_group") {
          cfg.complexity.word_bomb_min_group = int_value(v, "complexity." + k);
        } else {
          config_error("unknown key complexity." + k);
        }
      }
    } else if (key == "health_weights") {
      if (!value.is_object()) config_error("health_weights must be an object");
      cfg.health.weights.clear();
      for (const auto& [dim, w] : value.items()) {
        if (!w.is_number()) config_error("health_weights." + dim + " must be a number");
        cfg.health.weights[dim] = w.get<double>();
      }
    } else if (key == "isolate_files") {
      if (!value.is_boolean()) config_error("isolate_files must be a boolean");
      cfg.isolate_files = value.get<bool>();
    } else if (key == "columns") {
      if (!value.is_object()) config_error("columns must be an object");
      ColumnMap cols = ColumnMap::defaults();
      std::map<std::string, std::optional<std::string>*> optional_cols = {
          {"iri", &cols.iri_col},
          {"definition", &cols.definition_col},
          {"definition_source", &cols.def_source_col},
          {"parent", &cols.parent_col},
          {"synonyms", &cols.synonyms_col},
          {"obsolete", &cols.obsolete_col},
          {"replaced_by", &cols.replaced_by_col},
          {"tags", &cols.tags_col}};
      for (const auto& [k, v] : value.items()) {
        if (!v.is_string()) config_error("columns." + k + " must be a string");
        if (k == "label") {
          cols.label_col = v.get<std::string>();
        } else if (auto it = optional_cols.find(k); it != optional_cols.end()) {
          *it->second = v.get<std::string>();
        } else {
          config_error("unknown key columns." + k);
        }
      }
      cfg.columns = cols;
    } else {
      config_error("unknown key \"" + key + "\"");
    }
  }
  cfg.validate();
  return cfg;
}

void RuleConfig::validate() const {
  for (const auto& [id, sev] : severity_overrides) {
    if (!is_known_rule(id)) config_error("severity_overrides names unknown rule \"" + id + "\"");
  }
  for (const auto& name : std::views::keys(lexicon_paths)) {
    const auto& names = Lexicons::names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      config_error("unknown lexicon \"" + name + "\"");
    }
  }
  complexity.validate();
  try {
    health.validate();
  } catch (const VocabError& e) {
    config_error(e.what());
  }
}

std::string_view to_string(InputFormat format) {
  return format == InputFormat::obo ? "obo" : "tsv";
}

InputFormat parse_format(std::string_view text) {
  auto v = ascii_lower(text);
  if (v == "obo") return InputFormat::obo;
  if (v == "tsv") return InputFormat::tsv;
  throw VocabError(ErrorKind::unknown_format,
                   "unknown format \"" + std::string(text) + "\" (expected obo or tsv)");
}

InputFormat infer_format(const fs::path& path) {
  auto ext = ascii_lower(path.extension().string());
  if (ext == ".obo") return InputFormat::obo;
  if (ext == ".tsv" || ext == ".tab") return InputFormat::tsv;
  throw VocabError(ErrorKind::unknown_format,
                   "cannot infer the format of " + path.string() + "; pass --format obo|tsv");
}

bool finding_less(const Finding& a, const Finding& b) {
  auto key = [](const Finding& f) {
    return std::make_tuple(location_file(f), location_line(f), std::cref(f.rule_id),
                           std::cref(f.subject_label), std::cref(f.message),
                           static_cast<int>(f.severity), iri_list(f),
                           f.suggestion.value_or(""));
  };
  return key(a) < key(b);
}

Report run_lint(const RuleConfig& config, std::vector<InputSpec> inputs) {
  config.validate();
  const Lexicons lex = load_lexicons(config);
  const PrefixMap prefixes = base_prefixes(config);

  std::sort(inputs.begin(), inputs.end(),
            [](const InputSpec& a, const InputSpec& b) { return a.path < b.path; });

  Report report;
  std::vector<Finding> raw;
  std::vector<ParseResult> parsed;
  for (const auto& input : inputs) {
    auto format = input.format ? *input.format : infer_format(input.path);
    parsed.push_back(parse_input(input.path, format, config.columns));
    report.inputs.push_back({input.path.string(), format, parsed.back().vocabulary.size()});
    for (const auto& d : parsed.back().diagnostics) raw.push_back(parse_finding(d));
  }

  PrefixMap run_prefixes = prefixes;
  for (const auto& p : parsed) run_prefixes.merge(p.vocabulary.prefix_map());

  if (config.isolate_files) {
    for (const auto& p : parsed) {
      PrefixMap file_prefixes = prefixes;
      file_prefixes.merge(p.vocabulary.prefix_map());
      append(raw, analyze(Vocabulary(p.vocabulary.terms(), file_prefixes), lex, config.complexity));
    }
  } else {
    std::vector<Term> merged;
    for (const auto& p : parsed) {
      merged.insert(merged.end(), p.vocabulary.terms().begin(), p.vocabulary.terms().end());
    }
    append(raw, analyze(Vocabulary(std::move(merged), run_prefixes), lex, config.complexity));
  }

  for (auto& f : raw) {
    if (!enabled(config, f.rule_id) || suppressed(config, f, run_prefixes)) continue;
    if (auto it = config.severity_overrides.find(f.rule_id); it != config.severity_overrides.end()) {
      f.severity = it->second;
    }
    report.findings.push_back(std::move(f));
  }
  std::sort(report.findings.begin(), report.findings.end(), finding_less);
  for (auto s : {Severity::error, Severity::warning, Severity::info}) report.counts[s] = 0;
  for (const auto& f : report.findings) ++report.counts[f.severity];
  return report;
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  config_error("output format \"" + std::string(text) + "\" must be text or json");
}

std::string render_report(const Report& report, OutputFormat format, bool color) {
  auto count = [&](Severity s) {
    auto it = report.counts.find(s);
    return it == report.counts.end() ? std::size_t{0} : it->second;
  };
  if (format == OutputFormat::json) {
    json doc;
    doc["tool_version"] = report.tool_version;
    doc["inputs"] = json::array();
    for (const auto& in : report.inputs) {
      doc["inputs"].push_back(
          {{"file", in.file}, {"format", to_string(in.format)}, {"term_count", in.term_count}});
    }
    doc["counts"] = {{"error", count(Severity::error)},
                     {"warning", count(Severity::warning)},
                     {"info", count(Severity::info)}};
    doc["findings"] = json::array();
    for (const auto& f : report.findings) {
      json iris = json::array();
      for (const auto& i : f.subject_iris) iris.push_back(i.value());
      doc["findings"].push_back({{"file", location_file(f)},
                                 {"line", location_line(f)},
                                 {"severity", to_string(f.severity)},
                                 {"rule_id", f.rule_id},
                                 {"subject_label", f.subject_label},
                                 {"subject_iris", std::move(iris)},
                                 {"message", f.message},
                                 {"suggestion", f.suggestion ? json(*f.suggestion) : json()}});
    }
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const auto& f : report.findings) {
    out += (f.location ? f.location->file : "-") + ":" + std::to_string(location_line(f)) + ": ";
    if (color) out += color_of(f.severity);
    out += to_string(f.severity);
    if (color) out += "\x1b[0m";
    out += " " + f.rule_id;
    if (!f.subject_label.empty()) out += " " + f.subject_label;
    out += ": " + f.message;
    if (f.suggestion) out += " (suggest: " + *f.suggestion + ")";
    out += "\n";
  }
  out += std::to_string(report.findings.size()) + " finding" +
         (report.findings.size() == 1 ? "" : "s") + " in " +
         std::to_string(report.inputs.size()) + " file" +
         (report.inputs.size() == 1 ? "" : "s") + ": " +
         std::to_string(count(Severity::error)) + " error, " +
         std::to_string(count(Severity::warning)) + " warning, " +
         std::to_string(count(Severity::info)) + " info\n";
  return out;
}

int exit_code(const Report& report, const RuleConfig& config) {
  for (const auto& f : report.findings) {
    if (f.severity >= config.fail_threshold) return 1;
  }
  return 0;
}

std::string suggest_mode(const RuleConfig& config, const std::vector<std::string>& queries,
                         OutputFormat format, std::size_t top_k) {
  if (config.reference_paths.empty()) {
    throw VocabError(ErrorKind::no_references, "suggest needs at least one reference vocabulary");
  }
  PrefixMap prefixes = base_prefixes(config);
  auto paths = config.reference_paths;
  std::sort(paths.begin(), paths.end());
  std::vector<Vocabulary> refs;
  for (const auto& path : paths) {
    auto parsed = parse_input(path, infer_format(path), config.columns);
    PrefixMap merged = prefixes;
    merged.merge(parsed.vocabulary.prefix_map());
    refs.emplace_back(parsed.vocabulary.terms(), merged);
  }
  auto index = build_index(refs);

  json doc;
  doc["queries"] = json::array();
  std::string text;
  for (const auto& q : queries) {
    auto suggestions = suggest_terms(index, q, top_k);
    json list = json::array();
    text += "query \"" + q + "\":\n";
    if (suggestions.empty()) text += "  no suggestions\n";
    for (std::size_t i = 0; i < suggestions.size(); ++i) {
      const auto& s = suggestions[i];
      list.push_back({{"iri", s.iri},
                      {"label", s.label},
                      {"score", s.score},
                      {"match_kind", to_string(s.match_kind)},
                      {"matched_phrase", s.matched_phrase},
                      {"reuse_count", s.reuse_count}});
      text += "  " + std::to_string(i + 1) + ". " + format_score(s.score) + " " + s.label + " <" +
              s.iri + "> " + std::string(to_string(s.match_kind)) + " \"" + s.matched_phrase +
              "\" reused by " + std::to_string(s.reuse_count) + "\n";
    }
    doc["queries"].push_back({{"query", q}, {"suggestions", std::move(list)}});
  }
  return format == OutputFormat::json ? doc.dump(2) + "\n" : text;
}

std::string render_health(const MetadataLoad& load, const HealthConfig& config,
                          OutputFormat format) {
  json doc;
  doc["reports"] = json::array();
  std::string text;
  for (const auto& meta : load.records) {
    auto r = assess_health(meta, config);
    json subs = json::object();
    for (const char* dim : kHealthDimensions) subs[dim] = r.subscores.at(dim);
    doc["reports"].push_back({{"name", r.name},
                              {"subscores", subs},
                              {"composite", r.composite},
                              {"verdict", to_string(r.verdict)},
                              {"notes", r.notes}});
    text += r.name + ": " + std::string(to_string(r.verdict)) + " (composite " +
            format_score(r.composite) + ")\n";
    for (const char* dim : kHealthDimensions) {
      text += "  " + std::string(dim) + " " + format_score(r.subscores.at(dim)) + "\n";
    }
    for (const auto& n : r.notes) text += "  note: " + n + "\n";
  }
  doc["errors"] = json::array();
  for (const auto& e : load.errors) {
    doc["errors"].push_back({{"line", e.line}, {"message", e.message}});
    text += "record at line " + std::to_string(e.line) + " rejected: " + e.message + "\n";
  }
  doc["notes"] = json::array();
  for (const auto& n : load.notes) {
    doc["notes"].push_back({{"line", n.line}, {"message", n.message}});
    text += "line " + std::to_string(n.line) + ": " + n.message + "\n";
  }
  return format == OutputFormat::json ? doc.dump(2) + "\n" : text;
}

const std::vector<RuleInfo>& rule_catalog() { return kCatalog; }

bool is_known_rule(std::string_view id) {
  return std::any_of(kCatalog.begin(), kCatalog.end(),
                     [&](const RuleInfo& r) { return r.id == id; });
}

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::string render_catalog(OutputFormat format) {
  if (format == OutputFormat::json) {
    json doc = json::array();
    for (const auto& r : kCatalog) {
      doc.push_back({{"rule_id", r.id},
                     {"default_severity", to_string(r.default_severity)},
                     {"guideline", r.guideline},
                     {"summary", r.summary}});
    }
    return doc.dump(2) + "\n";
  }
  std::string out = "Default severities are editorial; override them per project.\n";
  for (const auto& r : kCatalog) {
    std::string id(r.id);
    id.resize(std::max<std::size_t>(id.size(), 20), ' ');
    std::string sev(to_string(r.default_severity));
    sev.resize(8, ' ');
    out += id + " " + sev + " " + std::string(r.guideline) + ": " + std::string(r.summary) + "\n";
  }
  return out;
}

}  // namespace vocab_lint
