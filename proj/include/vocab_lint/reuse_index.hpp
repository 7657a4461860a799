#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vocab_lint/term_model.hpp"

namespace vocab_lint {

enum class PhraseKind { label, exact_synonym, other_synonym };

enum class MatchKind { exact_label, exact_synonym, other_synonym, token_overlap, fuzzy };

std::string_view to_string(MatchKind kind);

/// Score ladder for suggestions. Exact matches score the fixed weight of the
/// phrase kind; token overlap scales Jaccard similarity; fuzzy scales
/// 1 - distance / max(length) and only applies within `fuzzy_max_distance`.
struct ScoringWeights {
  double exact_label = 1.0;
  double exact_synonym = 0.9;
  double other_synonym = 0.8;
  double token_overlap = 0.7;
  double fuzzy = 0.6;
  double fuzzy_max_distance = 0.25;
};

/// One reference term, merged across every vocabulary that carries its IRI.
struct IndexedTerm {
  std::string iri;  ///< expanded IRI, or a "file:line" key for IRI-less terms
  std::string label;
  std::size_t source_count = 0;
};

struct Suggestion {
  std::size_t term = 0;  ///< position in ReuseIndex::terms()
  std::string iri;
  std::string label;
  double score = 0.0;
  MatchKind match_kind = MatchKind::fuzzy;
  std::string matched_phrase;
  std::size_t reuse_count = 0;
};

class ReuseIndex {
 public:
  struct Posting {
    std::size_t term;
    PhraseKind kind;

    auto operator<=>(const Posting&) const = default;
  };

  const std::vector<IndexedTerm>& terms() const noexcept { return terms_; }
  /// normalized phrase -> postings, sorted and unique
  const std::map<std::string, std::vector<Posting>>& entries() const noexcept { return entries_; }
  const std::map<std::string, std::set<std::size_t>>& token_index() const noexcept {
    return token_index_;
  }
  std::size_t source_count(const std::string& expanded_iri) const;
  bool empty() const noexcept { return terms_.empty(); }

 private:
  friend ReuseIndex build_index(std::span<const Vocabulary> references);
  friend std::vector<Suggestion> suggest_terms(const ReuseIndex&, std::string_view, std::size_t,
                                               const ScoringWeights&);

  std::vector<IndexedTerm> terms_;
  std::map<std::string, std::vector<Posting>> entries_;
  std::map<std::string, std::set<std::size_t>> token_index_;
  std::map<std::string, std::set<std::string>> phrases_by_token_;
  // phrase length in code points -> phrases, for fuzzy candidate pruning
  std::map<std::size_t, std::vector<std::pair<std::string, std::u32string>>> by_length_;
};

/// Indexes the labels and synonyms of every live reference term.
ReuseIndex build_index(std::span<const Vocabulary> references);

/// Ranked reuse candidates for `query`: score desc, reuse count desc, IRI asc.
/// Throws VocabError(empty_query) when the query normalizes to nothing.
std::vector<Suggestion> suggest_terms(const ReuseIndex& index, std::string_view query,
                                      std::size_t k, const ScoringWeights& weights = {});

}  // namespace vocab_lint
