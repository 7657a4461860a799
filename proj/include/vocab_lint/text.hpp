#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vocab_lint {

/// Comparison key for labels, synonyms and definitions.
///
/// ASCII letters are lowercased, every ASCII punctuation character
/// (parentheses, hyphens, underscores, ...) becomes a space, whitespace runs
/// collapse to one space and the result is trimmed. Bytes outside the ASCII
/// range pass through untouched, so the result never depends on the locale.
std::string normalize_label(std::string_view raw);

/// Splits a normalized label on single spaces.
std::vector<std::string> tokenize(std::string_view normalized);

/// Convenience for tokenize(normalize_label(raw)).
std::vector<std::string> label_tokens(std::string_view raw);

/// Splits `raw` the same way normalize_label does, but keeps the original case.
/// Element i corresponds to element i of label_tokens(raw).
std::vector<std::string> raw_tokens(std::string_view raw);

/// True when `needle` occurs as a contiguous run inside `haystack`.
bool contains_token_run(std::span<const std::string> haystack,
                        std::span<const std::string> needle);

/// Index of the first occurrence of `needle` in `haystack` at or after `from`,
/// or haystack.size() when absent. An empty needle never matches.
std::size_t find_token_run(std::span<const std::string> haystack,
                           std::span<const std::string> needle,
                           std::size_t from = 0);

std::string join(std::span<const std::string> parts, std::string_view sep);

std::string_view trim(std::string_view s);

bool starts_with_ignore_case(std::string_view s, std::string_view prefix);

std::string ascii_lower(std::string_view s);

/// Decodes UTF-8 into code points. Malformed bytes decode as U+FFFD.
std::u32string utf8_decode(std::string_view s);

/// Unit-cost Levenshtein distance over code points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

/// Levenshtein distance, or `limit + 1` as soon as the distance is known to
/// exceed `limit`.
std::size_t bounded_edit_distance(std::u32string_view a, std::u32string_view b,
                                  std::size_t limit);

}  // namespace vocab_lint
