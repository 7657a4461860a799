#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vocab_lint/term_model.hpp"

namespace vocab_lint {

enum class DiagnosticSeverity { error, warning };

struct ParseDiagnostic {
  DiagnosticSeverity severity = DiagnosticSeverity::error;
  std::string message;
  SourceLocation location;

  bool operator==(const ParseDiagnostic&) const = default;
};

struct ParseResult {
  Vocabulary vocabulary;
  std::vector<ParseDiagnostic> diagnostics;
};

/// Column names for tab-separated term tables. Only the label column is
/// required; an optional column that is absent from the header is ignored.
struct ColumnMap {
  std::string label_col = "label";
  std::optional<std::string> iri_col;
  std::optional<std::string> definition_col;
  std::optional<std::string> def_source_col;
  std::optional<std::string> parent_col;
  std::optional<std::string> synonyms_col;
  std::optional<std::string> obsolete_col;
  std::optional<std::string> replaced_by_col;
  /// Not part of the core table layout: free-form tag values, stored as
  /// "tag" annotations.
  std::optional<std::string> tags_col;

  /// label, iri, definition, definition_source, parent, synonyms, obsolete,
  /// replaced_by, tags.
  static ColumnMap defaults();
};

/// Parses the supported OBO 1.4 subset (see docs/formats.md). Never throws;
/// problems surface as diagnostics.
ParseResult parse_obo(std::string_view input, const std::string& file_name);

/// Parses a UTF-8 tab-separated term table whose first row is the header.
/// Throws VocabError(parse_fatal) when the label column is missing.
ParseResult parse_term_table(std::string_view input, const std::string& file_name,
                             const ColumnMap& columns);

/// One [Term] stanza in the subset grammar accepted by parse_obo.
std::string write_obo_term(const Term& term);

/// Whole document: idspace header lines for the prefix map, then stanzas.
std::string write_obo(const Vocabulary& vocab);

}  // namespace vocab_lint
