#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vocab_lint/term_model.hpp"

namespace vocab_lint {

/// Pieces of a "[a|an] <subject> is a|an <genus> that|which <differentia>"
/// sentence, as normalized token runs.
struct GenusDifferentia {
  std::vector<std::string> subject;
  std::vector<std::string> genus;
  std::vector<std::string> differentia;
};

/// Text up to the first "." that is followed by whitespace or the end.
std::string first_sentence(const std::string& text);

/// Matches the first sentence of a definition against the genus-differentia
/// form.
std::optional<GenusDifferentia> match_genus_differentia(const std::string& definition_text);

/// Normalized definition tokens that can mention other terms: everything
/// after the copula when the definition opens with "<subject> is a|an",
/// otherwise the whole definition.
std::vector<std::string> mention_tokens(const Definition& definition);

/// Directed "definition of T mentions the label of U" relation. Node i is
/// vocab.terms()[i]; keys are term_key() values.
class DefinitionGraph {
 public:
  explicit DefinitionGraph(const Vocabulary& vocab);

  std::size_t size() const noexcept { return keys_.size(); }
  const std::string& key(std::size_t node) const { return keys_[node]; }
  /// Sorted, duplicate-free successor lists (self-edges included).
  const std::vector<std::size_t>& successors(std::size_t node) const { return edges_[node]; }
  bool has_edge(std::size_t from, std::size_t to) const;

 private:
  std::vector<std::string> keys_;
  std::vector<std::vector<std::size_t>> edges_;
};

/// Simple cycles of length >= 2, each rotated to start at its least key and
/// listed in lexicographic order of key sequences. Stops after `limit`.
std::vector<std::vector<std::size_t>> find_simple_cycles(const DefinitionGraph& graph,
                                                         std::size_t limit);

inline constexpr std::size_t kMaxReportedCycles = 100;

std::vector<Finding> check_definition_present(const Term& term);
std::vector<Finding> check_genus_differentia(const Term& term, const Vocabulary& vocab);
std::vector<Finding> check_definition_uniqueness(const Vocabulary& vocab);
std::vector<Finding> detect_circular_definitions(const Vocabulary& vocab);

}  // namespace vocab_lint
