#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vocab_lint/term_model.hpp"

namespace vocab_lint {

inline constexpr std::string_view kOboPurlBase = "http://purl.obolibrary.org/obo/";

/// Reads "PREFIX<TAB>IRI-base<TAB>obo|external" lines; "#" starts a comment.
/// Throws VocabError(invalid_config) on malformed lines or duplicate prefixes.
PrefixMap load_prefix_map(std::string_view text);

std::vector<Finding> check_iri(const Term& term, const PrefixMap& prefixes);
std::vector<Finding> check_iri_uniqueness(const Vocabulary& vocab);
std::vector<Finding> check_label_collisions(const Vocabulary& vocab);
std::vector<Finding> check_synonym_collisions(const Vocabulary& vocab);
std::vector<Finding> check_deprecation(const Vocabulary& vocab);

}  // namespace vocab_lint
