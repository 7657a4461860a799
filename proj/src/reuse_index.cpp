#include "vocab_lint/reuse_index.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "vocab_lint/text.hpp"

namespace vocab_lint {
namespace {

double exact_score(PhraseKind kind, const ScoringWeights& w) {
  switch (kind) {
    case PhraseKind::label: return w.exact_label;
    case PhraseKind::exact_synonym: return w.exact_synonym;
    case PhraseKind::other_synonym: return w.other_synonym;
  }
  return 0.0;
}

MatchKind exact_kind(PhraseKind kind) {
  switch (kind) {
    case PhraseKind::label: return MatchKind::exact_label;
    case PhraseKind::exact_synonym: return MatchKind::exact_synonym;
    case PhraseKind::other_synonym: return MatchKind::other_synonym;
  }
  return MatchKind::other_synonym;
}

std::set<std::string> token_set(std::string_view normalized) {
  auto tokens = tokenize(normalized);
  return {tokens.begin(), tokens.end()};
}

}  // namespace

std::string_view to_string(MatchKind kind) {
  switch (kind) {
    case MatchKind::exact_label: return "exact_label";
    case MatchKind::exact_synonym: return "exact_synonym";
    case MatchKind::other_synonym: return "other_synonym";
    case MatchKind::token_overlap: return "token_overlap";
    case MatchKind::fuzzy: return "fuzzy";
  }
  return "fuzzy";
}

std::size_t ReuseIndex::source_count(const std::string& expanded_iri) const {
  for (const auto& t : terms_) {
    if (t.iri == expanded_iri) return t.source_count;
  }
  return 0;
}

ReuseIndex build_index(std::span<const Vocabulary> references) {
  ReuseIndex index;
  std::unordered_map<std::string, std::size_t> by_key;
  std::vector<std::set<std::size_t>> sources;
  for (std::size_t vi = 0; vi < references.size(); ++vi) {
    const Vocabulary& vocab = references[vi];
    for (const auto& term : vocab.terms()) {
      if (term.obsolete) continue;
      auto key = term.iri ? vocab.expand(*term.iri) : term_key(term);
      auto [it, inserted] = by_key.emplace(key, index.terms_.size());
      if (inserted) {
        index.terms_.push_back({key, term.label, 0});
        sources.emplace_back();
      }
      std::size_t id = it->second;
      sources[id].insert(vi);
      auto add = [&](const std::string& text, PhraseKind kind) {
        auto phrase = normalize_label(text);
        if (phrase.empty()) return;
        index.entries_[phrase].push_back({id, kind});
        for (const auto& token : tokenize(phrase)) {
          index.token_index_[token].insert(id);
          index.phrases_by_token_[token].insert(phrase);
        }
      };
      add(term.label, PhraseKind::label);
      for (const auto& syn : term.synonyms) {
        add(syn.text, syn.scope == SynonymScope::exact ? PhraseKind::exact_synonym
                                                       : PhraseKind::other_synonym);
      }
    }
  }
  for (std::size_t i = 0; i < index.terms_.size(); ++i) {
    index.terms_[i].source_count = sources[i].size();
  }
  for (auto& [phrase, postings] : index.entries_) {
    std::sort(postings.begin(), postings.end());
    postings.erase(std::unique(postings.begin(), postings.end()), postings.end());
    auto decoded = utf8_decode(phrase);
    index.by_length_[decoded.size()].push_back({phrase, std::move(decoded)});
  }
  return index;
}

std::vector<Suggestion> suggest_terms(const ReuseIndex& index, std::string_view query,
                                      std::size_t k, const ScoringWeights& weights) {
  if (k == 0) return {};
  auto q = normalize_label(query);
  if (q.empty()) {
    throw VocabError(ErrorKind::empty_query, "query \"" + std::string(query) +
                                                 "\" is empty after normalization");
  }
  std::unordered_map<std::size_t, Suggestion> best;
  auto consider = [&](std::size_t term, double score, MatchKind kind, const std::string& phrase) {
    auto [it, inserted] = best.try_emplace(term);
    Suggestion& s = it->second;
    bool better = inserted || score > s.score ||
                  (score == s.score && (kind < s.match_kind ||
                                        (kind == s.match_kind && phrase < s.matched_phrase)));
    if (!better) return;
    s.term = term;
    s.score = score;
    s.match_kind = kind;
    s.matched_phrase = phrase;
  };

  const auto& entries = index.entries();
  if (auto it = entries.find(q); it != entries.end()) {
    for (const auto& p : it->second) consider(p.term, exact_score(p.kind, weights), exact_kind(p.kind), q);
  }

  auto q_tokens = token_set(q);
  std::set<std::size_t> overlap_terms;
  for (const auto& token : q_tokens) {
    if (auto it = index.token_index().find(token); it != index.token_index().end()) {
      overlap_terms.insert(it->second.begin(), it->second.end());
    }
  }
  if (!overlap_terms.empty()) {
    // Only phrases sharing a query token can overlap.
    std::set<std::string> candidates;
    for (const auto& token : q_tokens) {
      if (auto it = index.phrases_by_token_.find(token); it != index.phrases_by_token_.end()) {
        candidates.insert(it->second.begin(), it->second.end());
      }
    }
    for (const auto& phrase : candidates) {
      if (phrase == q) continue;
      auto p_tokens = token_set(phrase);
      std::size_t inter = 0;
      for (const auto& t : p_tokens) inter += q_tokens.count(t);
      std::size_t uni = q_tokens.size() + p_tokens.size() - inter;
      double score = weights.token_overlap * (static_cast<double>(inter) / static_cast<double>(uni));
      for (const auto& p : entries.at(phrase)) consider(p.term, score, MatchKind::token_overlap, phrase);
    }
  }

  auto q32 = utf8_decode(q);
  const std::size_t qlen = q32.size();
  for (const auto& [len, phrases] : index.by_length_) {
    std::size_t longest = std::max(qlen, len);
    std::size_t gap = qlen > len ? qlen - len : len - qlen;
    if (static_cast<double>(gap) > weights.fuzzy_max_distance * static_cast<double>(longest)) {
      continue;
    }
    auto limit = static_cast<std::size_t>(std::floor(weights.fuzzy_max_distance *
                                                     static_cast<double>(longest)));
    for (const auto& [phrase, decoded] : phrases) {
      if (phrase == q) continue;
      auto d = bounded_edit_distance(q32, decoded, limit);
      if (d > limit) continue;
      double normalized = static_cast<double>(d) / static_cast<double>(longest);
      if (normalized > weights.fuzzy_max_distance) continue;
      double score = weights.fuzzy * (1.0 - normalized);
      for (const auto& p : entries.at(phrase)) consider(p.term, score, MatchKind::fuzzy, phrase);
    }
  }

  std::vector<Suggestion> out;
  out.reserve(best.size());
  for (auto& [term, s] : best) {
    s.iri = index.terms()[term].iri;
    s.label = index.terms()[term].label;
    s.reuse_count = index.terms()[term].source_count;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.reuse_count != b.reuse_count) return a.reuse_count > b.reuse_count;
    return a.iri < b.iri;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace vocab_lint
