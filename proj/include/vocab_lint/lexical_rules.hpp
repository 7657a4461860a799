#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vocab_lint/term_model.hpp"

namespace vocab_lint {

/// Word lists consulted by the label checks. Every entry is stored in
/// normalize_label form.
struct Lexicons {
  std::set<std::string> negative_determiners;
  std::set<std::string> negative_prefix_allowlist;
  std::set<std::string> accepted_abbreviation_words;
  std::set<std::string> proper_noun_allowlist;
  std::set<std::string> plural_by_nature;
  std::map<std::string, std::string> colloquial_map;
  std::set<std::string> timeline_phrases;

  static Lexicons defaults();

  /// Names accepted by extend(): negative_determiners, negative_prefix_allowlist,
  /// accepted_abbreviation_words, proper_noun_allowlist, plural_by_nature,
  /// colloquial_map, timeline_phrases.
  static const std::vector<std::string>& names();

  /// Adds the entries of a lexicon file to the named list. One entry per line,
  /// "#" starts a comment line, colloquial_map lines read
  /// "colloquial -> preferred", and a leading "!" removes an entry.
  /// Throws VocabError(invalid_config) on unknown names or malformed lines.
  void extend(std::string_view name, std::string_view file_text);

  /// Throws VocabError(invalid_config) when a preferred phrase is itself a
  /// colloquial key.
  void validate() const;
};

struct ComplexityConfig {
  int concept_bomb_token_threshold = 7;
  int word_bomb_min_group = 5;

  /// Throws VocabError(invalid_config) when a threshold is below 2.
  void validate() const;
};

std::vector<Finding> check_abbreviation(const Term& term, const Lexicons& lex);
std::vector<Finding> check_negative_phrasing(const Term& term, const Lexicons& lex);
std::vector<Finding> check_conjunction(const Term& term, const Lexicons& lex);
std::vector<Finding> check_plural(const Term& term, const Lexicons& lex);
std::vector<Finding> check_colloquial(const Term& term, const Lexicons& lex);
std::vector<Finding> check_timeline(const Term& term, const Lexicons& lex);
std::vector<Finding> check_concept_bomb(const Term& term, const ComplexityConfig& cfg,
                                        const Lexicons& lex);

/// Clusters live labels by head noun and reports combinatorial families.
std::vector<Finding> detect_word_bombs(const Vocabulary& vocab, const ComplexityConfig& cfg);

/// Reports labels that only prepend modifiers to another live label without
/// declaring it as a parent.
std::vector<Finding> check_redundant_narrowing(const Vocabulary& vocab);

/// Tag values that encode booleans or absence. Findings carry the tag value
/// as subject_label and no subject IRI; callers attach the owning term.
std::vector<Finding> check_tag_style(std::span<const std::string> tag_values,
                                     const Lexicons& lex);

/// All per-term label checks in catalog order.
std::vector<Finding> run_label_checks(const Term& term, const Lexicons& lex,
                                      const ComplexityConfig& cfg);

}  // namespace vocab_lint
