#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vocab_lint {

enum class ErrorKind {
  unknown_iri,
  replacement_cycle,
  empty_query,
  invalid_weights,
  invalid_config,
  unreadable_input,
  unknown_format,
  parse_fatal,
  no_references,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure raised by the library. The CLI maps these to
/// exit code 2.
class VocabError : public std::runtime_error {
 public:
  VocabError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A term identifier: either an absolute IRI ("scheme://...") or a CURIE
/// ("PREFIX:LOCALID", split at the first colon).
class Iri {
 public:
  /// Throws std::invalid_argument on empty text or embedded whitespace.
  explicit Iri(std::string value);

  static std::optional<Iri> parse(std::string_view text);

  const std::string& value() const noexcept { return value_; }
  bool is_absolute() const noexcept;
  /// Text before the first ':', empty for absolute IRIs or text with no colon.
  std::string_view curie_prefix() const noexcept;
  std::string_view curie_local() const noexcept;

  auto operator<=>(const Iri&) const = default;

 private:
  std::string value_;
};

struct SourceLocation {
  std::string file;
  int line = 1;

  auto operator<=>(const SourceLocation&) const = default;
};

enum class SynonymScope { exact, broad, narrow, related };

std::string_view to_string(SynonymScope scope);

struct Synonym {
  std::string text;
  SynonymScope scope = SynonymScope::exact;
  bool is_abbreviation = false;

  bool operator==(const Synonym&) const = default;
};

struct Definition {
  std::string text;
  std::vector<std::string> sources;

  bool operator==(const Definition&) const = default;
};

struct Term {
  std::optional<Iri> iri;
  std::string label;
  std::vector<Synonym> synonyms;
  std::optional<Definition> definition;
  std::vector<Iri> parents;
  bool obsolete = false;
  std::optional<Iri> replaced_by;
  /// Opaque tags. Keys are kept sorted; repeated keys keep file order.
  std::multimap<std::string, std::string> annotations;
  std::optional<SourceLocation> location;

  bool operator==(const Term&) const = default;
};

/// Stable identity for reporting: the IRI when present, else "file:line".
std::string term_key(const Term& term);

struct PrefixEntry {
  std::string base;
  bool obo = false;

  bool operator==(const PrefixEntry&) const = default;
};

class PrefixMap {
 public:
  PrefixMap() = default;

  /// Throws VocabError(invalid_config) on empty prefixes, non-absolute bases,
  /// or a prefix that is already registered with a different base.
  void add(const std::string& prefix, PrefixEntry entry);
  /// Entries from `other` win over existing ones.
  void merge(const PrefixMap& other);

  const PrefixEntry* find(std::string_view prefix) const;
  const std::map<std::string, PrefixEntry, std::less<>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Expanded form of a CURIE with a registered prefix, or the input text
  /// unchanged (absolute IRIs and unknown prefixes).
  std::string expand(const Iri& iri) const;
  bool can_expand(const Iri& iri) const;

  /// A handful of OBO Foundry namespaces so typical files lint without a
  /// prefix file.
  static PrefixMap obo_defaults();

 private:
  std::map<std::string, PrefixEntry, std::less<>> entries_;
};

/// Immutable, indexed term collection.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<Term> terms, PrefixMap prefixes = {});

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const PrefixMap& prefix_map() const noexcept { return prefixes_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Looks up by expanded IRI; the first term bearing an IRI wins.
  const Term* find(const Iri& iri) const;
  std::optional<std::size_t> index_of(const Iri& iri) const;

  /// Indices of terms whose normalized label equals `normalized`.
  const std::vector<std::size_t>& with_label(const std::string& normalized) const;

  const std::unordered_map<std::string, std::size_t>& by_iri() const noexcept { return by_iri_; }
  const std::map<std::string, std::vector<std::size_t>>& by_label() const noexcept {
    return by_label_;
  }

  /// Expanded IRIs borne by more than one term, in first-seen order.
  const std::vector<std::string>& duplicate_iris() const noexcept { return duplicates_; }

  std::string expand(const Iri& iri) const { return prefixes_.expand(iri); }

 private:
  std::vector<Term> terms_;
  PrefixMap prefixes_;
  std::unordered_map<std::string, std::size_t> by_iri_;
  std::map<std::string, std::vector<std::size_t>> by_label_;
  std::vector<std::string> duplicates_;
};

/// Follows replaced_by links from `start` to the first term without one.
/// Throws VocabError(unknown_iri) when a link leaves the vocabulary and
/// VocabError(replacement_cycle) when the chain revisits a term.
Iri resolve_replacement(const Vocabulary& vocab, const Iri& start);

enum class Severity { info = 0, warning = 1, error = 2 };

std::string_view to_string(Severity severity);
std::optional<Severity> parse_severity(std::string_view text);

struct Finding {
  std::string rule_id;
  Severity severity = Severity::warning;
  std::vector<Iri> subject_iris;
  std::string subject_label;
  std::string message;
  std::optional<SourceLocation> location;
  std::optional<std::string> suggestion;

  bool operator==(const Finding&) const = default;
};

/// Finding anchored on a single term (IRI and location copied from it).
Finding make_finding(std::string rule_id, Severity severity, const Term& term,
                     std::string message);

}  // namespace vocab_lint
