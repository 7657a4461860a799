#include "vocab_lint/term_model.hpp"

#include <algorithm>
#include <unordered_set>

#include "vocab_lint/text.hpp"

namespace vocab_lint {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unknown_iri: return "unknown-iri";
    case ErrorKind::replacement_cycle: return "replacement-cycle";
    case ErrorKind::empty_query: return "empty-query";
    case ErrorKind::invalid_weights: return "invalid-weights";
    case ErrorKind::invalid_config: return "invalid-config";
    case ErrorKind::unreadable_input: return "unreadable-input";
    case ErrorKind::unknown_format: return "unknown-format";
    case ErrorKind::parse_fatal: return "parse-fatal";
    case ErrorKind::no_references: return "no-references";
  }
  return "unknown";
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw std::invalid_argument("IRI must not be empty");
  for (char c : value_) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      throw std::invalid_argument("IRI must not contain whitespace: '" + value_ + "'");
    }
  }
}

std::optional<Iri> Iri::parse(std::string_view text) {
  try {
    return Iri(std::string(text));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool Iri::is_absolute() const noexcept {
  return value_.find("://") != std::string::npos;
}

std::string_view Iri::curie_prefix() const noexcept {
  if (is_absolute()) return {};
  auto colon = value_.find(':');
  if (colon == std::string::npos) return {};
  return std::string_view(value_).substr(0, colon);
}

std::string_view Iri::curie_local() const noexcept {
  if (is_absolute()) return {};
  auto colon = value_.find(':');
  if (colon == std::string::npos) return {};
  return std::string_view(value_).substr(colon + 1);
}

std::string_view to_string(SynonymScope scope) {
  switch (scope) {
    case SynonymScope::exact: return "EXACT";
    case SynonymScope::broad: return "BROAD";
    case SynonymScope::narrow: return "NARROW";
    case SynonymScope::related: return "RELATED";
  }
  return "RELATED";
}

std::string term_key(const Term& term) {
  if (term.iri) return term.iri->value();
  if (term.location) return term.location->file + ":" + std::to_string(term.location->line);
  return "<" + term.label + ">";
}

void PrefixMap::add(const std::string& prefix, PrefixEntry entry) {
  if (prefix.empty()) throw VocabError(ErrorKind::invalid_config, "empty CURIE prefix");
  if (entry.base.find("://") == std::string::npos) {
    throw VocabError(ErrorKind::invalid_config,
                     "prefix '" + prefix + "' maps to non-absolute base '" + entry.base + "'");
  }
  auto [it, inserted] = entries_.emplace(prefix, entry);
  if (!inserted && it->second.base != entry.base) {
    throw VocabError(ErrorKind::invalid_config, "duplicate prefix '" + prefix + "'");
  }
  it->second.obo = it->second.obo || entry.obo;
}

void PrefixMap::merge(const PrefixMap& other) {
  for (const auto& [prefix, entry] : other.entries_) entries_[prefix] = entry;
}

const PrefixEntry* PrefixMap::find(std::string_view prefix) const {
  auto it = entries_.find(prefix);
  return it == entries_.end() ? nullptr : &it->second;
}

bool PrefixMap::can_expand(const Iri& iri) const {
  auto prefix = iri.curie_prefix();
  return !prefix.empty() && find(prefix) != nullptr;
}

std::string PrefixMap::expand(const Iri& iri) const {
  auto prefix = iri.curie_prefix();
  if (prefix.empty()) return iri.value();
  const auto* entry = find(prefix);
  if (!entry) return iri.value();
  return entry->base + std::string(iri.curie_local());
}

PrefixMap PrefixMap::obo_defaults() {
  static const char* const kPrefixes[] = {
      "BFO", "CHEBI", "CL", "DOID", "ENVO", "FOODON", "GAZ", "GENEPIO", "GO", "HP",
      "IAO", "MONDO", "NCBITaxon", "NCIT", "OBI", "PATO", "RO", "SO", "UBERON", "UO"};
  PrefixMap map;
  for (const char* prefix : kPrefixes) {
    map.add(prefix, {std::string("http://purl.obolibrary.org/obo/") + prefix + "_", true});
  }
  return map;
}

namespace {
const std::vector<std::size_t> kNoTerms;
}

Vocabulary::Vocabulary(std::vector<Term> terms, PrefixMap prefixes)
    : terms_(std::move(terms)), prefixes_(std::move(prefixes)) {
  std::unordered_set<std::string> seen_dup;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    by_label_[normalize_label(t.label)].push_back(i);
    if (!t.iri) continue;
    auto key = prefixes_.expand(*t.iri);
    auto [it, inserted] = by_iri_.emplace(key, i);
    if (!inserted && seen_dup.insert(key).second) duplicates_.push_back(key);
  }
}

const Term* Vocabulary::find(const Iri& iri) const {
  auto idx = index_of(iri);
  return idx ? &terms_[*idx] : nullptr;
}

std::optional<std::size_t> Vocabulary::index_of(const Iri& iri) const {
  auto it = by_iri_.find(prefixes_.expand(iri));
  if (it == by_iri_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& Vocabulary::with_label(const std::string& normalized) const {
  auto it = by_label_.find(normalized);
  return it == by_label_.end() ? kNoTerms : it->second;
}

Iri resolve_replacement(const Vocabulary& vocab, const Iri& start) {
  const Term* current = vocab.find(start);
  if (!current) throw VocabError(ErrorKind::unknown_iri, "unknown IRI '" + start.value() + "'");
  Iri at = start;
  std::unordered_set<std::string> visited{vocab.expand(start)};
  while (current->replaced_by) {
    const Iri& next = *current->replaced_by;
    const Term* target = vocab.find(next);
    if (!target) {
      throw VocabError(ErrorKind::unknown_iri, "replacement target '" + next.value() +
                                                   "' of '" + at.value() + "' is not defined");
    }
    if (!visited.insert(vocab.expand(next)).second) {
      throw VocabError(ErrorKind::replacement_cycle,
                       "replacement chain from '" + start.value() + "' revisits '" +
                           next.value() + "'");
    }
    at = next;
    current = target;
  }
  return at;
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::info: return "info";
    case Severity::warning: return "warning";
    case Severity::error: return "error";
  }
  return "info";
}

std::optional<Severity> parse_severity(std::string_view text) {
  auto lower = ascii_lower(text);
  if (lower == "info") return Severity::info;
  if (lower == "warning") return Severity::warning;
  if (lower == "error") return Severity::error;
  return std::nullopt;
}

Finding make_finding(std::string rule_id, Severity severity, const Term& term,
                     std::string message) {
  Finding f;
  f.rule_id = std::move(rule_id);
  f.severity = severity;
  if (term.iri) f.subject_iris.push_back(*term.iri);
  f.subject_label = term.label;
  f.message = std::move(message);
  f.location = term.location;
  return f;
}

}  // namespace vocab_lint
